#include "noonsim/elements.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "noonsim/errors.hpp"

namespace noonsim {

PhaseConvention parse_phase_convention(const std::string& name) {
  if (name == "one-arm") return PhaseConvention::one_arm;
  if (name == "symmetric") return PhaseConvention::symmetric;
  throw DomainError("unknown phase convention '" + name + "'");
}

std::string to_string(PhaseConvention c) {
  return c == PhaseConvention::one_arm ? "one-arm" : "symmetric";
}

BlockUnitary beam_splitter(double theta, int max_n) {
  return spectral_exponential(j_operator(JAxis::x, max_n), theta);
}

BlockObservable phase_generator(PhaseConvention convention, int max_n) {
  return convention == PhaseConvention::one_arm ? number_b(max_n) : j_operator(JAxis::z, max_n);
}

BlockUnitary phase_shifter(double phi, PhaseConvention convention, int max_n) {
  return spectral_exponential(phase_generator(convention, max_n), phi);
}

BlockUnitary mach_zehnder(double phi, PhaseConvention convention, bool invert_second_bs,
                          int max_n) {
  constexpr double half_pi = std::numbers::pi / 2;
  const auto first = beam_splitter(half_pi, max_n);
  const auto second = beam_splitter(invert_second_bs ? -half_pi : half_pi, max_n);
  return compose(second, compose(phase_shifter(phi, convention, max_n), first));
}

BlockUnitary flip_diagnostic(int n, int max_n) {
  if (n < 1 || n > max_n) throw DomainError("flip diagnostic needs 1 <= N <= max_n");
  auto id = BlockUnitary::identity(max_n);
  std::vector<Block> blocks(id.blocks().begin(), id.blocks().end());
  const double r = 1.0 / std::sqrt(2.0);
  Block& b = blocks[n];
  b(0, 0) = r;
  b(0, n) = r;
  b(n, 0) = r;
  b(n, n) = -r;
  return BlockUnitary(std::move(blocks));
}

namespace {

BlockUnitary stage_unitary(const Stage& stage, int max_n) {
  if (const auto* bs = std::get_if<BeamSplitterStage>(&stage)) return beam_splitter(bs->theta, max_n);
  if (const auto* fixed = std::get_if<FixedStage>(&stage)) {
    if (fixed->unitary.max_n() < max_n) {
      throw DomainError("fixed stage '" + fixed->name + "' does not cover the pipeline cutoff");
    }
    return fixed->unitary;
  }
  throw ContractViolation("phase stage has no fixed unitary");
}

std::size_t find_phase_slot(const std::vector<Stage>& stages) {
  std::optional<std::size_t> slot;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (!std::holds_alternative<PhaseStage>(stages[i])) continue;
    if (slot) throw DomainError("pipeline has more than one phase slot");
    slot = i;
  }
  if (!slot) throw DomainError("pipeline has no phase slot");
  return *slot;
}

BlockUnitary product(const std::vector<Stage>& stages, std::size_t from, std::size_t to,
                     int max_n) {
  auto u = BlockUnitary::identity(max_n);
  for (std::size_t i = from; i < to; ++i) u = compose(stage_unitary(stages[i], max_n), u);
  return u;
}

}  // namespace

InterferometerPipeline::InterferometerPipeline(std::vector<Stage> stages, int max_n)
    : stages_(std::move(stages)),
      max_n_(max_n),
      phase_slot_(find_phase_slot(stages_)),
      before_(product(stages_, 0, phase_slot_, max_n_)),
      after_(product(stages_, phase_slot_ + 1, stages_.size(), max_n_)),
      output_generator_(conjugate(
          phase_generator(std::get<PhaseStage>(stages_[phase_slot_]).convention, max_n_),
          after_)) {}

InterferometerPipeline InterferometerPipeline::mach_zehnder(PhaseConvention convention,
                                                            bool invert_second_bs, int max_n) {
  constexpr double half_pi = std::numbers::pi / 2;
  return InterferometerPipeline({BeamSplitterStage{half_pi}, PhaseStage{convention},
                                 BeamSplitterStage{invert_second_bs ? -half_pi : half_pi}},
                                max_n);
}

PhaseConvention InterferometerPipeline::convention() const {
  return std::get<PhaseStage>(stages_[phase_slot_]).convention;
}

BlockUnitary InterferometerPipeline::evaluate(double phi) const {
  return compose(after_, compose(phase_shifter(phi, convention(), max_n_), before_));
}

TwoModeState InterferometerPipeline::run(const TwoModeState& input, double phi) const {
  return apply(after_, apply(phase_shifter(phi, convention(), max_n_), apply(before_, input)));
}

}  // namespace noonsim
