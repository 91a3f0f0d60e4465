#pragma once

// Two-mode bosonic Fock space, Schwinger angular-momentum operators and
// block-diagonal unitaries.
//
// Every operator here conserves the total photon number n = n_a + n_b, so
// states and operators are stored one block per n. Block n has dimension
// n + 1 and is ordered by descending n_a:
//
//   index 0 -> |n, 0>,  index 1 -> |n-1, 1>,  ...,  index n -> |0, n>
//
// i.e. the in-block index equals n_b.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace noonsim {

using Complex = std::complex<double>;
using Block = Eigen::MatrixXcd;

/// Flat offset of block n inside a state vector.
constexpr std::size_t block_offset(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
}

/// Number of amplitudes of a state holding blocks 0..cutoff.
constexpr std::size_t fock_dimension(int cutoff) { return block_offset(cutoff + 1); }

struct FockIndex {
  int n_a = 0;
  int n_b = 0;

  int total() const { return n_a + n_b; }
  friend bool operator==(const FockIndex&, const FockIndex&) = default;
  friend auto operator<=>(const FockIndex&, const FockIndex&) = default;
};

/// Normalized pure state over {(n_a, n_b) : n_a + n_b <= cutoff}.
class TwoModeState {
 public:
  /// Takes a flat amplitude vector of length fock_dimension(cutoff).
  /// Throws DomainError on a size mismatch or if the norm deviates from 1
  /// by more than 1e-10.
  TwoModeState(int cutoff, std::vector<Complex> amplitudes, double truncation_tail = 0.0);

  int cutoff() const { return cutoff_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<const Complex> block(int n) const;
  Complex amplitude(int n_a, int n_b) const;
  Complex amplitude(FockIndex idx) const { return amplitude(idx.n_a, idx.n_b); }

  double norm_squared() const;

  /// Largest n whose block holds a nonzero amplitude, or -1 for the zero vector.
  int highest_populated_block() const;

  /// Probability mass discarded when this state was truncated from an
  /// infinite expansion (0 for exactly representable states).
  double truncation_tail() const { return truncation_tail_; }

  /// Same state embedded into a larger cutoff, or shrunk when the dropped
  /// blocks are exactly zero.
  TwoModeState with_cutoff(int cutoff) const;

 private:
  int cutoff_;
  std::vector<Complex> amplitudes_;
  double truncation_tail_;
};

TwoModeState make_basis_state(int n_a, int n_b, int cutoff);

/// Per-block Hermitian operator. Blocks 0..max_n are stored explicitly.
class BlockObservable {
 public:
  /// Throws ContractViolation if a block is not (n+1)x(n+1) or not
  /// Hermitian within 1e-12.
  explicit BlockObservable(std::vector<Block> blocks);

  int max_n() const { return static_cast<int>(blocks_.size()) - 1; }
  const Block& block(int n) const;
  std::span<const Block> blocks() const { return blocks_; }

 private:
  std::vector<Block> blocks_;
};

/// Per-block unitary. Blocks 0..max_n are stored explicitly.
class BlockUnitary {
 public:
  /// Throws ContractViolation if a block is not unitary within 1e-12.
  explicit BlockUnitary(std::vector<Block> blocks);

  static BlockUnitary identity(int max_n);

  int max_n() const { return static_cast<int>(blocks_.size()) - 1; }
  const Block& block(int n) const;
  std::span<const Block> blocks() const { return blocks_; }

  BlockUnitary adjoint() const;

 private:
  std::vector<Block> blocks_;
};

/// outer * inner, truncated to the smaller of the two max_n.
BlockUnitary compose(const BlockUnitary& outer, const BlockUnitary& inner);

/// U A U^dagger, i.e. A carried through U into the output frame.
BlockObservable conjugate(const BlockObservable& a, const BlockUnitary& u);

enum class JAxis { x, y, z, squared };

/// Matrix of J_x, J_y, J_z or J^2 on the fixed-n block.
Block build_j_operator(JAxis axis, int n);

/// The same operator over blocks 0..max_n.
BlockObservable j_operator(JAxis axis, int max_n);

BlockObservable number_a(int max_n);
BlockObservable number_b(int max_n);

/// Per-block exp(i * scale * H) via Hermitian eigendecomposition.
BlockUnitary spectral_exponential(const BlockObservable& h, double scale);

/// Per-block U psi. Throws DomainError if the state populates a block
/// beyond U.max_n().
TwoModeState apply(const BlockUnitary& u, const TwoModeState& s);

/// Per-block A psi (unnormalized, returned flat in the state's layout).
std::vector<Complex> apply_observable(const BlockObservable& a, const TwoModeState& s);

/// <s|A|s>; the imaginary part is discarded.
double expectation(const BlockObservable& a, const TwoModeState& s);

/// <A^2> - <A>^2, clamped to 0 when it lands in [-1e-12, 0).
double variance(const BlockObservable& a, const TwoModeState& s);

/// Expectation of i[A, G].
double commutator_expectation(const BlockObservable& a, const BlockObservable& g,
                              const TwoModeState& s);

/// |amplitude|^2 per flat index.
std::vector<double> probabilities(const TwoModeState& s);

/// (n_a, n_b) labels for every flat index of a state with this cutoff.
std::vector<FockIndex> fock_labels(int cutoff);

}  // namespace noonsim
