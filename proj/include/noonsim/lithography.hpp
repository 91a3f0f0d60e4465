#pragma once

#include <span>
#include <string>
#include <vector>

namespace noonsim {

enum class DepositionKind {
  single,                 // 1 + cos(phi)
  classical_two_photon,   // (1 + cos(phi))^2
  noon,                   // 1 + cos(N phi)
};

DepositionKind parse_deposition_kind(const std::string& name);
std::string to_string(DepositionKind kind);

struct DepositionCurve {
  DepositionKind kind;
  int n;
  double lambda;
  std::vector<double> x;
  std::vector<double> rate;
};

/// Deposition rate at each x with phi = pi x / lambda. `n` is only used by
/// DepositionKind::noon.
DepositionCurve deposition_rate(DepositionKind kind, int n, std::span<const double> x_grid,
                                double lambda);

/// Mean spacing between adjacent interior maxima, each located by fitting
/// a parabola through the grid maximum and its two neighbours. Throws
/// InsufficientGridError with fewer than two maxima or fewer than 64
/// samples per period.
double fringe_period(const DepositionCurve& curve);

struct FidelityOptimum {
  double theta;
  double fidelity;
};

/// Sweeps BS(theta) over |n_a, n_b> and scores each output against the
/// closest N00N state (any relative phase):
///   F = (|c_{N,0}| + |c_{0,N}|)^2 / 2,  N = n_a + n_b.
FidelityOptimum noon_fidelity_sweep(int n_a, int n_b, std::span<const double> theta_grid);

}  // namespace noonsim
