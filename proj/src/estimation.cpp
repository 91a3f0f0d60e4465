#include "noonsim/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "noonsim/errors.hpp"
#include "noonsim/parallel.hpp"

namespace noonsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlopeFloor = 1e-14;
constexpr double kProbabilityFloor = 1e-15;

double wrap(double x, double period) {
  x = std::fmod(x + period / 2, period);
  if (x < 0) x += period;
  return x - period / 2;
}

double effective_period(const PosteriorDistribution& p, double period) {
  if (period > 0) return period;
  if (p.phi.size() < 2) return 2 * std::numbers::pi;
  const double step = (p.phi.back() - p.phi.front()) / static_cast<double>(p.phi.size() - 1);
  return p.phi.back() - p.phi.front() + step;
}

}  // namespace

BlockObservable observable_noon_flip(int n, int max_n) {
  if (n < 1) throw DomainError("flip observable needs N >= 1");
  if (max_n < 0) max_n = n;
  if (max_n < n) throw DomainError("flip observable block beyond max_n");
  std::vector<Block> blocks;
  for (int k = 0; k <= max_n; ++k) blocks.push_back(Block::Zero(k + 1, k + 1));
  blocks[n](0, n) = 1.0;
  blocks[n](n, 0) = 1.0;
  return BlockObservable(std::move(blocks));
}

double phase_derivative(const TwoModeState& state, const BlockObservable& a,
                        const BlockObservable& generator) {
  return commutator_expectation(a, generator, state);
}

double sensitivity(const TwoModeState& state, const BlockObservable& a,
                   const BlockObservable& generator) {
  const auto a_psi = apply_observable(a, state);
  const auto g_psi = apply_observable(generator, state);
  Complex overlap{};
  double a_norm = 0.0;
  double g_norm = 0.0;
  for (std::size_t i = 0; i < a_psi.size(); ++i) {
    overlap += std::conj(a_psi[i]) * g_psi[i];
    a_norm += std::norm(a_psi[i]);
    g_norm += std::norm(g_psi[i]);
  }
  const double slope = -2.0 * overlap.imag();
  // |<i[A,G]>| <= 2 |A psi| |G psi|; the floor tracks that scale so that
  // eigensolver round-off on large blocks is not mistaken for signal.
  const double scale = std::max(1.0, 2.0 * std::sqrt(a_norm * g_norm));
  if (std::abs(slope) < kSlopeFloor * scale) return kInf;
  return std::sqrt(variance(a, state)) / std::abs(slope);
}

SensitivityCurve sensitivity_curve(const InterferometerPipeline& pipeline,
                                   const TwoModeState& input, const BlockObservable& a,
                                   std::span<const double> phi_grid, int threads) {
  SensitivityCurve curve;
  curve.phi.assign(phi_grid.begin(), phi_grid.end());
  const auto size = phi_grid.size();
  curve.expectation.resize(size);
  curve.variance.resize(size);
  curve.delta_phi.resize(size);
  parallel_for(size, threads, [&](std::size_t i) {
    const auto out = pipeline.run(input, phi_grid[i]);
    curve.expectation[i] = expectation(a, out);
    curve.variance[i] = variance(a, out);
    curve.delta_phi[i] = sensitivity(out, a, pipeline.output_generator());
  });
  return curve;
}

MinSensitivity min_sensitivity(const SensitivityCurve& curve) {
  MinSensitivity best{0.0, kInf};
  for (std::size_t i = 0; i < curve.delta_phi.size(); ++i) {
    if (curve.delta_phi[i] < best.delta_phi) best = {curve.phi[i], curve.delta_phi[i]};
  }
  if (!std::isfinite(best.delta_phi)) {
    throw NoInformationError("sensitivity diverges at every grid phase");
  }
  return best;
}

double ensemble_sensitivity(int n, double phi) {
  if (n < 1) throw DomainError("ensemble needs N >= 1");
  const double s = std::sin(phi);
  const double spread = std::sqrt(n * s * s);
  const double slope = n * s;
  if (std::abs(slope) < kSlopeFloor) return kInf;
  return spread / std::abs(slope);
}

std::vector<double> outcome_distribution(const InterferometerPipeline& pipeline,
                                         const TwoModeState& input, double phi) {
  return probabilities(pipeline.run(input, phi));
}

double classical_fisher(const InterferometerPipeline& pipeline, const TwoModeState& input,
                        double phi, double dphi) {
  if (!(dphi > 0)) throw DomainError("finite-difference step must be positive");
  const auto p = outcome_distribution(pipeline, input, phi);
  const auto plus = outcome_distribution(pipeline, input, phi + dphi);
  const auto minus = outcome_distribution(pipeline, input, phi - dphi);
  double fisher = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < kProbabilityFloor) continue;
    const double dp = (plus[k] - minus[k]) / (2 * dphi);
    fisher += dp * dp / p[k];
  }
  return fisher;
}

OutcomeHistogram sample_outcomes(const InterferometerPipeline& pipeline,
                                 const TwoModeState& input, double phi, long shots,
                                 std::uint64_t seed) {
  if (shots < 0) throw DomainError("shots must be non-negative");
  const auto p = outcome_distribution(pipeline, input, phi);
  const auto labels = fock_labels(input.cutoff());

  std::vector<double> cdf(p.size());
  std::partial_sum(p.begin(), p.end(), cdf.begin());
  const double total = cdf.back();

  OutcomeHistogram hist{phi, shots, seed, {}};
  std::mt19937_64 rng(seed);
  for (long s = 0; s < shots; ++s) {
    // 53 high bits -> uniform in [0, 1); identical on every platform.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // Never land on a zero-probability outcome at the top of the range.
    auto k = static_cast<std::size_t>(std::distance(cdf.begin(), it));
    if (k >= p.size()) k = p.size() - 1;
    while (p[k] == 0.0 && k > 0) --k;
    ++hist.counts[labels[k]];
  }
  return hist;
}

PosteriorDistribution bayes_posterior(const OutcomeHistogram& hist,
                                      const InterferometerPipeline& pipeline,
                                      const TwoModeState& input, std::span<const double> phi_grid,
                                      int threads) {
  if (phi_grid.empty()) throw DomainError("empty phase grid");
  PosteriorDistribution post{{phi_grid.begin(), phi_grid.end()}, {}};
  std::vector<double> log_like(phi_grid.size(), 0.0);

  parallel_for(phi_grid.size(), threads, [&](std::size_t i) {
    const auto out = pipeline.run(input, phi_grid[i]);
    double acc = 0.0;
    for (const auto& [outcome, count] : hist.counts) {
      if (count == 0) continue;
      if (outcome.total() > out.cutoff()) {
        acc = -kInf;
        break;
      }
      const double prob = std::norm(out.amplitude(outcome));
      if (prob <= 0.0) {
        acc = -kInf;
        break;
      }
      acc += static_cast<double>(count) * std::log(prob);
    }
    log_like[i] = acc;
  });

  const double peak = *std::max_element(log_like.begin(), log_like.end());
  if (!std::isfinite(peak)) {
    throw ModelMismatchError("observed outcomes are impossible at every grid phase");
  }
  post.weights.resize(log_like.size());
  double norm = 0.0;
  for (std::size_t i = 0; i < log_like.size(); ++i) {
    post.weights[i] = std::exp(log_like[i] - peak);
    norm += post.weights[i];
  }
  for (auto& w : post.weights) w /= norm;
  return post;
}

double posterior_mean(const PosteriorDistribution& p, double period) {
  const double span = effective_period(p, period);
  const double origin = p.phi.empty() ? 0.0 : p.phi.front();
  double c = 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < p.phi.size(); ++i) {
    const double angle = 2 * std::numbers::pi * (p.phi[i] - origin) / span;
    c += p.weights[i] * std::cos(angle);
    s += p.weights[i] * std::sin(angle);
  }
  double angle = std::atan2(s, c);
  if (angle < 0) angle += 2 * std::numbers::pi;
  return origin + angle * span / (2 * std::numbers::pi);
}

double posterior_std(const PosteriorDistribution& p, double period) {
  const double span = effective_period(p, period);
  const double mean = posterior_mean(p, period);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.phi.size(); ++i) {
    const double d = wrap(p.phi[i] - mean, span);
    acc += p.weights[i] * d * d;
  }
  return std::sqrt(acc);
}

ScalingFit scaling_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw DomainError("scaling fit needs at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, v] : points) {
    if (!(n > 0) || !(v > 0) || !std::isfinite(v)) {
      throw DomainError("scaling fit needs strictly positive finite values");
    }
    const double x = std::log(n);
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double denom = m * sxx - sx * sx;
  if (!(denom > 1e-12 * m * sxx)) throw DomainError("scaling fit needs distinct n values");
  const double slope = (m * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / m};
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) throw DomainError("grid count must be positive");
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = start;
    return grid;
  }
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) grid[i] = start + step * i;
  grid.back() = stop;
  return grid;
}

}  // namespace noonsim
