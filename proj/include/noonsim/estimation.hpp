#pragma once

// Phase-sensitivity evaluation, classical Fisher information, seeded
// outcome sampling and grid-based Bayesian phase estimation.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "noonsim/elements.hpp"
#include "noonsim/fock.hpp"

namespace noonsim {

/// |0,N><N,0| + |N,0><0,N| on block N, zero on blocks 0..max_n otherwise.
/// max_n < 0 means max_n = N.
BlockObservable observable_noon_flip(int n, int max_n = -1);

/// Error-propagation phase uncertainty  Delta A / |d<A>/dphi|.
///
/// `state` is the state at the phase of interest and `generator` the phase
/// generator expressed in the same frame as `a`, with the phase entering as
/// exp(i phi G). The slope is the exact expectation of i[A, G]. Returns
/// +infinity when the slope magnitude is below 1e-14 * max(1, 2|A psi||G psi|).
double sensitivity(const TwoModeState& state, const BlockObservable& a,
                   const BlockObservable& generator);

/// Slope d<A>/dphi as used by sensitivity().
double phase_derivative(const TwoModeState& state, const BlockObservable& a,
                        const BlockObservable& generator);

struct SensitivityCurve {
  std::string scheme;
  std::string observable;
  std::vector<double> phi;
  std::vector<double> expectation;
  std::vector<double> variance;
  std::vector<double> delta_phi;  // +inf where the slope vanishes
};

/// Evaluates sensitivity at every grid phase for `a` measured at the
/// pipeline output. `threads` workers evaluate grid points concurrently.
SensitivityCurve sensitivity_curve(const InterferometerPipeline& pipeline,
                                   const TwoModeState& input, const BlockObservable& a,
                                   std::span<const double> phi_grid, int threads = 1);

struct MinSensitivity {
  double phi;
  double delta_phi;
};

/// Smallest finite entry; throws NoInformationError if none is finite.
MinSensitivity min_sensitivity(const SensitivityCurve& curve);

/// Repeated single-particle experiment: Delta A_R / |d<A_R>/dphi| with
/// <A_R> = N cos(phi) and (Delta A_R)^2 = N sin^2(phi).
double ensemble_sensitivity(int n, double phi);

/// Photon-number distribution at the pipeline output, in flat Fock order.
std::vector<double> outcome_distribution(const InterferometerPipeline& pipeline,
                                         const TwoModeState& input, double phi);

/// sum_k (dp_k/dphi)^2 / p_k over the output number distribution, slope by
/// central difference with step dphi; outcomes with p_k < 1e-15 skipped.
double classical_fisher(const InterferometerPipeline& pipeline, const TwoModeState& input,
                        double phi, double dphi);

struct OutcomeHistogram {
  double phi_true = 0.0;
  long shots = 0;
  std::uint64_t seed = 0;
  std::map<FockIndex, long> counts;
};

/// i.i.d. draws from the exact output distribution using mt19937_64.
OutcomeHistogram sample_outcomes(const InterferometerPipeline& pipeline,
                                 const TwoModeState& input, double phi, long shots,
                                 std::uint64_t seed);

struct PosteriorDistribution {
  std::vector<double> phi;
  std::vector<double> weights;
};

/// Uniform prior times the multinomial likelihood, accumulated in log space
/// and normalized on the grid. Throws ModelMismatchError if the data has
/// zero likelihood at every grid phase.
PosteriorDistribution bayes_posterior(const OutcomeHistogram& hist,
                                      const InterferometerPipeline& pipeline,
                                      const TwoModeState& input, std::span<const double> phi_grid,
                                      int threads = 1);

/// Circular mean and standard deviation with the grid folded onto the given
/// period. period <= 0 uses the grid span plus one spacing.
double posterior_mean(const PosteriorDistribution& p, double period = 0.0);
double posterior_std(const PosteriorDistribution& p, double period = 0.0);

struct ScalingFit {
  double slope;
  double intercept;
};

/// Least-squares line through (log n, log value). Needs >= 3 points, all
/// strictly positive.
ScalingFit scaling_fit(std::span<const std::pair<double, double>> points);

/// `count` equally spaced points from start to stop inclusive.
std::vector<double> linspace(double start, double stop, int count);

}  // namespace noonsim
