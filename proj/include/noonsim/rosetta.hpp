#pragma once

// Small N-qubit state-vector simulator: the circuit-model side of the
// interferometer / Ramsey / logic-gate correspondence.
//
// Qubit k is bit k of the amplitude index. Bitstring labels list qubit 0
// first, so "10" means qubit 0 in |1>, qubit 1 in |0>.

#include <complex>
#include <string>
#include <vector>

namespace noonsim {

inline constexpr int kMaxQubits = 14;

class QubitRegister {
 public:
  /// |0...0> on n qubits, 1 <= n <= kMaxQubits.
  explicit QubitRegister(int n_qubits);

  /// Computational basis state from a label such as "0110".
  static QubitRegister from_bitstring(const std::string& bits);

  /// Takes 2^n amplitudes; throws DomainError unless normalized within 1e-12.
  QubitRegister(int n_qubits, std::vector<std::complex<double>> amplitudes);

  int n_qubits() const { return n_qubits_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(const std::string& bits) const;
  double norm_squared() const;

  /// Probability that qubit k reads 0.
  double probability_zero(int k) const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amplitudes_;
};

QubitRegister hadamard(const QubitRegister& reg, int k);
QubitRegister cnot(const QubitRegister& reg, int control, int target);
/// diag(1, exp(i phi)) on qubit k.
QubitRegister phase_gate(const QubitRegister& reg, int k, double phi);

/// H on qubit 0, then CNOT(0 -> k) for k = 1..N-1.
QubitRegister ghz_prepare(int n);

/// N copies of (|0> + exp(i phi)|1>)/sqrt(2).
QubitRegister product_phase_state(int n, double phi);

/// phase_gate(phi) on every qubit.
QubitRegister collective_phase(const QubitRegister& reg, double phi);

/// <X (x) X (x) ... (x) X>.
double expect_tensor_A(const QubitRegister& reg);
/// <sum_k X_k>.
double expect_sum_A(const QubitRegister& reg);

/// |<A_N> on the phased GHZ register - <A_N> on the Fock N00N state|.
double rosetta_equivalence(int n, double phi);

/// Largest difference between the output probabilities of a single photon
/// through the Mach-Zehnder (second splitter inverted) and H P(phi) H on |0>.
double single_photon_circuit_equivalence(double phi);

}  // namespace noonsim
