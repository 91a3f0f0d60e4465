#include "noonsim/states.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "noonsim/errors.hpp"

namespace noonsim {

namespace {

constexpr std::array<std::pair<Scheme, const char*>, 6> kSchemeNames{{
    {Scheme::single_port_fock, "single-port-fock"},
    {Scheme::coherent, "coherent"},
    {Scheme::dual_fock, "dual-fock"},
    {Scheme::noon, "noon"},
    {Scheme::yurke_fermionic_analog, "yurke-fermionic-analog"},
    {Scheme::yurke_bosonic, "yurke-bosonic"},
}};

void require_cutoff(int needed, int cutoff, const char* what) {
  if (needed > cutoff) {
    throw DomainError(std::string(what) + " needs cutoff >= " + std::to_string(needed) +
                      ", got " + std::to_string(cutoff));
  }
}

TwoModeState two_term(FockIndex first, FockIndex second, Complex second_phase, int cutoff) {
  std::vector<Complex> amps(fock_dimension(cutoff));
  const double r = 1.0 / std::sqrt(2.0);
  amps[block_offset(first.total()) + first.n_b] += r;
  amps[block_offset(second.total()) + second.n_b] += r * second_phase;
  return TwoModeState(cutoff, std::move(amps));
}

double log_poisson(int n, double mean) {
  if (mean == 0.0) return n == 0 ? 0.0 : -INFINITY;
  return -mean + n * std::log(mean) - std::lgamma(n + 1.0);
}

// Mass of Poisson(mean) strictly above `cutoff`.
double poisson_tail(int cutoff, double mean) {
  if (mean == 0.0) return 0.0;
  double term = std::exp(log_poisson(cutoff + 1, mean));
  double tail = 0.0;
  for (int n = cutoff + 1; n < cutoff + 100000; ++n) {
    tail += term;
    // Past the mode the terms decrease monotonically, geometric bound applies.
    if (n > mean && term < 1e-300) break;
    if (n > mean && term <= tail * 1e-17) break;
    term *= mean / (n + 1);
  }
  return tail;
}

}  // namespace

Scheme parse_scheme(const std::string& name) {
  for (const auto& [scheme, label] : kSchemeNames) {
    if (name == label) return scheme;
  }
  throw DomainError("unknown scheme '" + name + "'");
}

std::string to_string(Scheme scheme) {
  for (const auto& [s, label] : kSchemeNames) {
    if (s == scheme) return label;
  }
  return "unknown";
}

const std::vector<Scheme>& all_schemes() {
  static const std::vector<Scheme> schemes = [] {
    std::vector<Scheme> out;
    for (const auto& entry : kSchemeNames) out.push_back(entry.first);
    return out;
  }();
  return schemes;
}

SchemeTag::SchemeTag(Scheme scheme_, int n_, std::vector<double> extra_)
    : scheme(scheme_), n(n_), extra(std::move(extra_)) {
  if (n < 0) throw DomainError("photon number must be non-negative");
  if (scheme == Scheme::yurke_fermionic_analog && n % 2 == 0) {
    throw ParityError("yurke-fermionic-analog needs odd N, got " + std::to_string(n));
  }
  if (scheme == Scheme::yurke_bosonic && (n % 2 != 0 || n == 0)) {
    throw ParityError("yurke-bosonic needs even N >= 2, got " + std::to_string(n));
  }
}

TwoModeState single_port_fock(int n, int cutoff) {
  require_cutoff(n, cutoff, "single-port Fock state");
  return make_basis_state(n, 0, cutoff);
}

int coherent_cutoff(double mean_photons, double tail_tol) {
  int cutoff = static_cast<int>(std::ceil(mean_photons));
  while (poisson_tail(cutoff, mean_photons) >= tail_tol) ++cutoff;
  return cutoff;
}

TwoModeState coherent_vacuum(Complex alpha, int cutoff, double tail_tol) {
  if (cutoff < 0) throw DomainError("negative cutoff");
  const double mean = std::norm(alpha);
  const double tail = poisson_tail(cutoff, mean);
  if (tail >= tail_tol) {
    const int required = coherent_cutoff(mean, tail_tol);
    throw TruncationError("coherent state |alpha|^2 = " + std::to_string(mean) +
                              " truncated at cutoff " + std::to_string(cutoff) +
                              " drops mass " + std::to_string(tail) + "; need cutoff >= " +
                              std::to_string(required),
                          required, tail);
  }
  std::vector<Complex> amps(fock_dimension(cutoff));
  const double arg = std::arg(alpha);
  double kept = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    const double magnitude = std::exp(0.5 * log_poisson(n, mean));
    amps[block_offset(n)] = std::polar(magnitude, n * arg);
    kept += magnitude * magnitude;
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& c : amps) c *= scale;
  return TwoModeState(cutoff, std::move(amps), tail);
}

TwoModeState dual_fock(int n, int cutoff) {
  require_cutoff(2 * n, cutoff, "dual Fock state");
  return make_basis_state(n, n, cutoff);
}

TwoModeState noon(int n, double phi, int cutoff) {
  if (n < 1) throw DomainError("N00N state needs N >= 1");
  require_cutoff(n, cutoff, "N00N state");
  return two_term({n, 0}, {0, n}, std::polar(1.0, n * phi), cutoff);
}

TwoModeState yurke_fermionic_analog(int n, int cutoff) {
  SchemeTag tag(Scheme::yurke_fermionic_analog, n);
  require_cutoff(n, cutoff, "Yurke state");
  return two_term({(n + 1) / 2, (n - 1) / 2}, {(n - 1) / 2, (n + 1) / 2}, 1.0, cutoff);
}

TwoModeState yurke_bosonic(int n, int cutoff) {
  SchemeTag tag(Scheme::yurke_bosonic, n);
  require_cutoff(n, cutoff, "bosonic Yurke state");
  return two_term({n / 2, n / 2}, {n / 2 + 1, n / 2 - 1}, 1.0, cutoff);
}

}  // namespace noonsim
