#pragma once

// Optical elements and the interferometer pipeline that strings them
// together around a single swept phase.

#include <string>
#include <variant>
#include <vector>

#include "noonsim/fock.hpp"

namespace noonsim {

enum class PhaseConvention {
  one_arm,    // exp(i phi n_b): every photon in arm B picks up exp(i phi)
  symmetric,  // exp(i phi J_z)
};

PhaseConvention parse_phase_convention(const std::string& name);
std::string to_string(PhaseConvention c);

/// exp(i theta J_x) on blocks 0..max_n; theta = pi/2 is the 50/50 splitter.
BlockUnitary beam_splitter(double theta, int max_n);

BlockUnitary phase_shifter(double phi, PhaseConvention convention, int max_n);

/// Generator G of the phase shifter, so that phase_shifter(phi) = exp(i phi G).
BlockObservable phase_generator(PhaseConvention convention, int max_n);

/// BS2 * PS(phi) * BS(pi/2), with BS2 = BS(-pi/2) when invert_second_bs.
BlockUnitary mach_zehnder(double phi, PhaseConvention convention, bool invert_second_bs,
                          int max_n);

/// Hadamard on span{|N,0>, |0,N>} and identity elsewhere: maps the +1/-1
/// eigenvectors of the N-photon flip observable onto |N,0> and |0,N>, so a
/// photon-number measurement afterwards resolves that observable.
BlockUnitary flip_diagnostic(int n, int max_n);

struct BeamSplitterStage {
  double theta;
};
struct PhaseStage {
  PhaseConvention convention = PhaseConvention::one_arm;
};
struct FixedStage {
  BlockUnitary unitary;
  std::string name;
};
using Stage = std::variant<BeamSplitterStage, PhaseStage, FixedStage>;

/// Ordered list of stages (first applied first) with exactly one phase slot.
class InterferometerPipeline {
 public:
  InterferometerPipeline(std::vector<Stage> stages, int max_n);

  /// Standard Mach-Zehnder: BS(pi/2), phase, BS(+-pi/2).
  static InterferometerPipeline mach_zehnder(PhaseConvention convention, bool invert_second_bs,
                                             int max_n);

  int max_n() const { return max_n_; }
  std::size_t phase_slot() const { return phase_slot_; }
  const std::vector<Stage>& stages() const { return stages_; }
  PhaseConvention convention() const;

  /// Full unitary at phase phi.
  BlockUnitary evaluate(double phi) const;

  /// Product of the stages applied before / after the phase slot.
  const BlockUnitary& before() const { return before_; }
  const BlockUnitary& after() const { return after_; }

  /// Phase generator carried to the pipeline output: after * G * after^dagger.
  const BlockObservable& output_generator() const { return output_generator_; }

  TwoModeState run(const TwoModeState& input, double phi) const;

 private:
  std::vector<Stage> stages_;
  int max_n_;
  std::size_t phase_slot_;
  BlockUnitary before_;
  BlockUnitary after_;
  BlockObservable output_generator_;
};

}  // namespace noonsim
