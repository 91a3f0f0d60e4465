#include "noonsim/lithography.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "noonsim/errors.hpp"
#include "noonsim/fock.hpp"

namespace noonsim {

DepositionKind parse_deposition_kind(const std::string& name) {
  if (name == "single") return DepositionKind::single;
  if (name == "classical-two-photon") return DepositionKind::classical_two_photon;
  if (name == "noon") return DepositionKind::noon;
  throw DomainError("unknown deposition kind '" + name + "'");
}

std::string to_string(DepositionKind kind) {
  switch (kind) {
    case DepositionKind::single:
      return "single";
    case DepositionKind::classical_two_photon:
      return "classical-two-photon";
    case DepositionKind::noon:
      return "noon";
  }
  return "unknown";
}

DepositionCurve deposition_rate(DepositionKind kind, int n, std::span<const double> x_grid,
                                double lambda) {
  if (!(lambda > 0)) throw DomainError("wavelength must be positive");
  if (kind == DepositionKind::noon && n < 1) throw DomainError("N00N deposition needs N >= 1");
  DepositionCurve curve{kind, n, lambda, {x_grid.begin(), x_grid.end()}, {}};
  curve.rate.reserve(x_grid.size());
  for (double x : x_grid) {
    const double phi = std::numbers::pi * x / lambda;
    double r = 0.0;
    switch (kind) {
      case DepositionKind::single:
        r = 1 + std::cos(phi);
        break;
      case DepositionKind::classical_two_photon:
        r = (1 + std::cos(phi)) * (1 + std::cos(phi));
        break;
      case DepositionKind::noon:
        r = 1 + std::cos(n * phi);
        break;
    }
    // cos can overshoot -1 by an ulp.
    curve.rate.push_back(std::max(r, 0.0));
  }
  return curve;
}

double fringe_period(const DepositionCurve& curve) {
  const auto& x = curve.x;
  const auto& f = curve.rate;
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    if (!(f[i] > f[i - 1] && f[i] >= f[i + 1])) continue;
    // Vertex of the parabola through the three samples (general spacing).
    const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
    const double d1 = (f[i] - f[i - 1]) / (x1 - x0);
    const double d2 = (f[i + 1] - f[i]) / (x2 - x1);
    const double curvature = (d2 - d1) / (x2 - x0);
    double vertex = x1;
    if (curvature < 0) vertex = 0.5 * (x0 + x1) - d1 / (2 * curvature);
    peaks.push_back(vertex);
  }
  if (peaks.size() < 2) {
    throw InsufficientGridError("need at least two interior maxima, found " +
                                std::to_string(peaks.size()));
  }
  const double period = (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
  const double spacing = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  if (period / spacing < 64.0) {
    throw InsufficientGridError("only " + std::to_string(period / spacing) +
                                " samples per period; need 64");
  }
  return period;
}

FidelityOptimum noon_fidelity_sweep(int n_a, int n_b, std::span<const double> theta_grid) {
  if (n_a < 0 || n_b < 0 || n_a + n_b < 1) throw DomainError("sweep needs n_a + n_b >= 1");
  if (theta_grid.empty()) throw DomainError("empty theta grid");
  const int n = n_a + n_b;
  // BS(theta) = V exp(i theta D) V^dagger with J_x = V D V^dagger.
  Eigen::SelfAdjointEigenSolver<Block> eig(build_j_operator(JAxis::x, n));
  const Block& v = eig.eigenvectors();
  const Eigen::VectorXcd coeffs = v.row(n_b).adjoint();  // V^dagger e_{n_b}
  FidelityOptimum best{theta_grid.front(), -1.0};
  for (double theta : theta_grid) {
    Complex top{}, bottom{};
    for (int k = 0; k <= n; ++k) {
      const Complex w = std::exp(Complex(0.0, theta * eig.eigenvalues()(k))) * coeffs(k);
      top += v(0, k) * w;
      bottom += v(n, k) * w;
    }
    const double amp = std::abs(top) + std::abs(bottom);
    const double fidelity = 0.5 * amp * amp;
    if (fidelity > best.fidelity) best = {theta, fidelity};
  }
  return best;
}

}  // namespace noonsim
