#include "noonsim/rosetta.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "noonsim/elements.hpp"
#include "noonsim/errors.hpp"
#include "noonsim/estimation.hpp"
#include "noonsim/states.hpp"

namespace noonsim {

namespace {

using Amplitudes = std::vector<std::complex<double>>;

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw DomainError("qubit count " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxQubits) + "]");
  }
}

void check_index(const QubitRegister& reg, int k) {
  if (k < 0 || k >= reg.n_qubits()) {
    throw DomainError("qubit index " + std::to_string(k) + " out of range for " +
                      std::to_string(reg.n_qubits()) + " qubits");
  }
}

std::size_t bit(int k) { return std::size_t{1} << k; }

std::size_t parse_bits(const std::string& bits) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      index |= bit(static_cast<int>(k));
    } else if (bits[k] != '0') {
      throw DomainError("bitstring '" + bits + "' may only contain 0 and 1");
    }
  }
  return index;
}

// <psi| X_mask |psi> where X_mask flips every bit in mask.
double flip_expectation(const Amplitudes& psi, std::size_t mask) {
  std::complex<double> acc{};
  for (std::size_t i = 0; i < psi.size(); ++i) acc += std::conj(psi[i]) * psi[i ^ mask];
  return acc.real();
}

}  // namespace

QubitRegister::QubitRegister(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_.assign(bit(n_qubits), 0.0);
  amplitudes_[0] = 1.0;
}

QubitRegister::QubitRegister(int n_qubits, Amplitudes amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amplitudes_.size() != bit(n_qubits)) throw DomainError("register needs 2^n amplitudes");
  if (std::abs(norm_squared() - 1.0) > 1e-12) throw DomainError("register is not normalized");
}

QubitRegister QubitRegister::from_bitstring(const std::string& bits) {
  const int n = static_cast<int>(bits.size());
  check_qubit_count(n);
  Amplitudes amps(bit(n));
  amps[parse_bits(bits)] = 1.0;
  return QubitRegister(n, std::move(amps));
}

std::complex<double> QubitRegister::amplitude(const std::string& bits) const {
  if (static_cast<int>(bits.size()) != n_qubits_) throw DomainError("bitstring length mismatch");
  return amplitudes_[parse_bits(bits)];
}

double QubitRegister::norm_squared() const {
  double acc = 0.0;
  for (const auto& c : amplitudes_) acc += std::norm(c);
  return acc;
}

double QubitRegister::probability_zero(int k) const {
  check_index(*this, k);
  double acc = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (!(i & bit(k))) acc += std::norm(amplitudes_[i]);
  }
  return acc;
}

QubitRegister hadamard(const QubitRegister& reg, int k) {
  check_index(reg, k);
  const double r = 1.0 / std::sqrt(2.0);
  Amplitudes out = reg.amplitudes();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i & bit(k)) continue;
    const auto a0 = out[i];
    const auto a1 = out[i | bit(k)];
    out[i] = r * (a0 + a1);
    out[i | bit(k)] = r * (a0 - a1);
  }
  return QubitRegister(reg.n_qubits(), std::move(out));
}

QubitRegister cnot(const QubitRegister& reg, int control, int target) {
  check_index(reg, control);
  check_index(reg, target);
  if (control == target) throw DomainError("CNOT control and target must differ");
  Amplitudes out = reg.amplitudes();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if ((i & bit(control)) && !(i & bit(target))) std::swap(out[i], out[i | bit(target)]);
  }
  return QubitRegister(reg.n_qubits(), std::move(out));
}

QubitRegister phase_gate(const QubitRegister& reg, int k, double phi) {
  check_index(reg, k);
  const auto phase = std::polar(1.0, phi);
  Amplitudes out = reg.amplitudes();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i & bit(k)) out[i] *= phase;
  }
  return QubitRegister(reg.n_qubits(), std::move(out));
}

QubitRegister ghz_prepare(int n) {
  auto reg = hadamard(QubitRegister(n), 0);
  for (int k = 1; k < n; ++k) reg = cnot(reg, 0, k);
  return reg;
}

QubitRegister product_phase_state(int n, double phi) {
  QubitRegister reg(n);
  for (int k = 0; k < n; ++k) reg = phase_gate(hadamard(reg, k), k, phi);
  return reg;
}

QubitRegister collective_phase(const QubitRegister& reg, double phi) {
  QubitRegister out = reg;
  for (int k = 0; k < reg.n_qubits(); ++k) out = phase_gate(out, k, phi);
  return out;
}

double expect_tensor_A(const QubitRegister& reg) {
  return flip_expectation(reg.amplitudes(), bit(reg.n_qubits()) - 1);
}

double expect_sum_A(const QubitRegister& reg) {
  double acc = 0.0;
  for (int k = 0; k < reg.n_qubits(); ++k) acc += flip_expectation(reg.amplitudes(), bit(k));
  return acc;
}

double rosetta_equivalence(int n, double phi) {
  const double circuit = expect_tensor_A(collective_phase(ghz_prepare(n), phi));
  const double optical = expectation(observable_noon_flip(n), noon(n, phi, n));
  return std::abs(circuit - optical);
}

double single_photon_circuit_equivalence(double phi) {
  const auto out = InterferometerPipeline::mach_zehnder(PhaseConvention::one_arm, true, 1)
                       .run(single_port_fock(1, 1), phi);
  const double optical_a = std::norm(out.amplitude(1, 0));
  const double optical_b = std::norm(out.amplitude(0, 1));

  const auto reg = hadamard(phase_gate(hadamard(QubitRegister(1), 0), 0, phi), 0);
  const double circuit_0 = reg.probability_zero(0);
  return std::max(std::abs(optical_a - circuit_0), std::abs(optical_b - (1.0 - circuit_0)));
}

}  // namespace noonsim
