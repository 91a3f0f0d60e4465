#pragma once

// Input-state factories for every interferometric scheme.

#include <string>
#include <vector>

#include "noonsim/fock.hpp"

namespace noonsim {

enum class Scheme {
  single_port_fock,
  coherent,
  dual_fock,
  noon,
  yurke_fermionic_analog,
  yurke_bosonic,
};

/// Canonical names: single-port-fock, coherent, dual-fock, noon,
/// yurke-fermionic-analog, yurke-bosonic.
Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme scheme);
const std::vector<Scheme>& all_schemes();

/// Scheme plus its photon-number parameter (mean photon number for
/// coherent) and any extra real parameters.
struct SchemeTag {
  Scheme scheme;
  int n;
  std::vector<double> extra;

  SchemeTag(Scheme scheme, int n, std::vector<double> extra = {});
};

/// |N, 0>.
TwoModeState single_port_fock(int n, int cutoff);

/// Coherent state in mode A, vacuum in B, truncated at `cutoff` and
/// renormalized. Throws TruncationError (with a cutoff estimate) when the
/// discarded Poisson tail exceeds tail_tol.
TwoModeState coherent_vacuum(Complex alpha, int cutoff, double tail_tol);

/// Smallest cutoff whose Poisson(|alpha|^2) tail mass is below tail_tol.
int coherent_cutoff(double mean_photons, double tail_tol);

/// |N, N>.
TwoModeState dual_fock(int n, int cutoff);

/// (|N,0> + exp(i N phi) |0,N>) / sqrt(2).
TwoModeState noon(int n, double phi, int cutoff);

/// (|(N+1)/2, (N-1)/2> + |(N-1)/2, (N+1)/2>) / sqrt(2), N odd.
TwoModeState yurke_fermionic_analog(int n, int cutoff);

/// (|N/2, N/2> + |N/2+1, N/2-1>) / sqrt(2), N even and >= 2.
TwoModeState yurke_bosonic(int n, int cutoff);

}  // namespace noonsim
