#pragma once

// Experiment runners behind the command-line tool and the Python module.
// Each runner turns an ExperimentConfig into a deterministic Table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noonsim/elements.hpp"
#include "noonsim/fock.hpp"
#include "noonsim/states.hpp"
#include "noonsim/table.hpp"

namespace noonsim {

/// `start:stop:count`, count points with both endpoints included.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  /// Throws DomainError unless count >= 2 and start < stop.
  static GridSpec parse(const std::string& text);
  void validate() const;
  std::vector<double> values() const;
};

/// `start:stop` or `start:stop:step` over integers, stop inclusive.
struct RangeSpec {
  int start = 1;
  int stop = 1;
  int step = 1;

  static RangeSpec parse(const std::string& text);
  std::vector<int> values() const;
};

enum class NoonFraming {
  after_first_bs,  // noon(N, 0) injected directly in front of the phase shifter
  input_port,      // its BS(pi/2)^-1 preimage fed through a full front splitter
};

NoonFraming parse_noon_framing(const std::string& name);

struct ExperimentConfig {
  Scheme scheme = Scheme::noon;
  int n = 1;
  std::optional<RangeSpec> n_range;
  GridSpec phi_grid{0.01, 3.13, 100};
  double phi = 0.3;
  long shots = 1000;
  std::uint64_t seed = 0;
  PhaseConvention convention = PhaseConvention::one_arm;
  bool invert_second_bs = false;
  NoonFraming framing = NoonFraming::after_first_bs;
  std::string observable = "auto";  // auto | jz | noon-flip
  std::string metric = "sensitivity";  // scaling: sensitivity | fisher
  std::string estimator = "none";      // sample: none | bayes
  int grid_points = 2048;              // Bayesian grid size
  double lambda = 1.0;
  int points = 512;                    // lithography samples per single-photon period
  double tail_tol = 1e-12;
  int cutoff = -1;                     // < 0: smallest cutoff the scheme needs
  int threads = 1;
};

/// Everything needed to simulate one scheme: its input state, the
/// interferometer, and the observable measured at the pipeline output.
struct SchemeSetup {
  SchemeTag tag;
  TwoModeState input;
  InterferometerPipeline pipeline;
  BlockObservable observable;
  std::string observable_name;
  /// Period in phi of the output photon-number distribution.
  double likelihood_period;
};

/// Builds the setup for `tag`. Mach-Zehnder schemes measure at the output
/// of BS-phase-BS. The N00N scheme replaces the second splitter with the
/// flip diagnostic so that photon counting resolves A_N; named observables
/// for it refer to the frame in front of that diagnostic.
SchemeSetup make_scheme_setup(const SchemeTag& tag, const ExperimentConfig& config);

Table run_sensitivity(const ExperimentConfig& config);
Table run_scaling(const ExperimentConfig& config);
Table run_hom(const ExperimentConfig& config);
Table run_litho(const ExperimentConfig& config);
Table run_rosetta(const ExperimentConfig& config);
Table run_sample(const ExperimentConfig& config);

}  // namespace noonsim
