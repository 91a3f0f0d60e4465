#include "noonsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "noonsim/errors.hpp"

namespace noonsim {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kOperatorTol = 1e-12;

double max_abs(const Block& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Eigen::Map<const Eigen::VectorXcd> block_view(std::span<const Complex> amps, int n) {
  return {amps.data() + block_offset(n), n + 1};
}

void check_block_shape(const Block& b, int n, const char* what) {
  if (b.rows() != n + 1 || b.cols() != n + 1) {
    throw ContractViolation(std::string(what) + ": block " + std::to_string(n) + " has shape " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void check_covers(int max_n, const TwoModeState& s, const char* what) {
  if (s.highest_populated_block() > max_n) {
    throw DomainError(std::string(what) + ": state populates block " +
                      std::to_string(s.highest_populated_block()) + " but operator stops at " +
                      std::to_string(max_n));
  }
}

// Blocks of the state that the operator must act on.
int active_blocks(const TwoModeState& s) { return s.highest_populated_block(); }

}  // namespace

TwoModeState::TwoModeState(int cutoff, std::vector<Complex> amplitudes, double truncation_tail)
    : cutoff_(cutoff), amplitudes_(std::move(amplitudes)), truncation_tail_(truncation_tail) {
  if (cutoff_ < 0) throw DomainError("negative cutoff");
  if (amplitudes_.size() != fock_dimension(cutoff_)) {
    throw DomainError("amplitude vector has " + std::to_string(amplitudes_.size()) +
                      " entries, cutoff " + std::to_string(cutoff_) + " needs " +
                      std::to_string(fock_dimension(cutoff_)));
  }
  if (std::abs(norm_squared() - 1.0) > kNormTol) {
    throw DomainError("state is not normalized (|psi|^2 = " + std::to_string(norm_squared()) + ")");
  }
}

std::span<const Complex> TwoModeState::block(int n) const {
  if (n < 0 || n > cutoff_) throw DomainError("block " + std::to_string(n) + " outside cutoff");
  return std::span<const Complex>(amplitudes_).subspan(block_offset(n), n + 1);
}

Complex TwoModeState::amplitude(int n_a, int n_b) const {
  if (n_a < 0 || n_b < 0 || n_a + n_b > cutoff_) {
    throw DomainError("Fock index (" + std::to_string(n_a) + ", " + std::to_string(n_b) +
                      ") outside cutoff " + std::to_string(cutoff_));
  }
  return amplitudes_[block_offset(n_a + n_b) + n_b];
}

double TwoModeState::norm_squared() const {
  double acc = 0.0;
  for (const auto& c : amplitudes_) acc += std::norm(c);
  return acc;
}

int TwoModeState::highest_populated_block() const {
  for (int n = cutoff_; n >= 0; --n) {
    const auto b = block(n);
    if (std::any_of(b.begin(), b.end(), [](Complex c) { return c != Complex{}; })) return n;
  }
  return -1;
}

TwoModeState TwoModeState::with_cutoff(int cutoff) const {
  if (cutoff < highest_populated_block()) {
    throw DomainError("cannot shrink cutoff below populated block " +
                      std::to_string(highest_populated_block()));
  }
  std::vector<Complex> amps(fock_dimension(cutoff));
  const auto keep = std::min(amps.size(), amplitudes_.size());
  std::copy_n(amplitudes_.begin(), keep, amps.begin());
  return TwoModeState(cutoff, std::move(amps), truncation_tail_);
}

TwoModeState make_basis_state(int n_a, int n_b, int cutoff) {
  if (n_a < 0 || n_b < 0 || n_a + n_b > cutoff) {
    throw DomainError("basis state (" + std::to_string(n_a) + ", " + std::to_string(n_b) +
                      ") outside cutoff " + std::to_string(cutoff));
  }
  std::vector<Complex> amps(fock_dimension(cutoff));
  amps[block_offset(n_a + n_b) + n_b] = 1.0;
  return TwoModeState(cutoff, std::move(amps));
}

BlockObservable::BlockObservable(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (int n = 0; n <= max_n(); ++n) {
    const auto& b = blocks_[n];
    check_block_shape(b, n, "BlockObservable");
    if (max_abs(b - b.adjoint()) > kOperatorTol) {
      throw ContractViolation("BlockObservable: block " + std::to_string(n) + " is not Hermitian");
    }
  }
}

const Block& BlockObservable::block(int n) const {
  if (n < 0 || n > max_n()) throw DomainError("observable has no block " + std::to_string(n));
  return blocks_[n];
}

BlockUnitary::BlockUnitary(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (int n = 0; n <= max_n(); ++n) {
    const auto& b = blocks_[n];
    check_block_shape(b, n, "BlockUnitary");
    if (max_abs(b.adjoint() * b - Block::Identity(n + 1, n + 1)) > kOperatorTol) {
      throw ContractViolation("BlockUnitary: block " + std::to_string(n) + " is not unitary");
    }
  }
}

BlockUnitary BlockUnitary::identity(int max_n) {
  std::vector<Block> blocks;
  for (int n = 0; n <= max_n; ++n) blocks.push_back(Block::Identity(n + 1, n + 1));
  return BlockUnitary(std::move(blocks));
}

const Block& BlockUnitary::block(int n) const {
  if (n < 0 || n > max_n()) throw DomainError("unitary has no block " + std::to_string(n));
  return blocks_[n];
}

BlockUnitary BlockUnitary::adjoint() const {
  std::vector<Block> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(b.adjoint());
  return BlockUnitary(std::move(blocks));
}

BlockUnitary compose(const BlockUnitary& outer, const BlockUnitary& inner) {
  const int max_n = std::min(outer.max_n(), inner.max_n());
  std::vector<Block> blocks;
  for (int n = 0; n <= max_n; ++n) blocks.push_back(outer.block(n) * inner.block(n));
  return BlockUnitary(std::move(blocks));
}

BlockObservable conjugate(const BlockObservable& a, const BlockUnitary& u) {
  const int max_n = std::min(a.max_n(), u.max_n());
  std::vector<Block> blocks;
  for (int n = 0; n <= max_n; ++n) {
    Block m = u.block(n) * a.block(n) * u.block(n).adjoint();
    // Round-off makes the product Hermitian only to ~1e-16; restore it exactly.
    blocks.push_back((m + m.adjoint()) / 2.0);
  }
  return BlockObservable(std::move(blocks));
}

Block build_j_operator(JAxis axis, int n) {
  if (n < 0) throw DomainError("negative photon number");
  const int dim = n + 1;
  // raise = a^dagger b, lowering n_b by one: column k -> row k-1.
  Block raise = Block::Zero(dim, dim);
  for (int k = 1; k <= n; ++k) {
    raise(k - 1, k) = std::sqrt(static_cast<double>((n - k + 1) * k));
  }
  const Block lower = raise.adjoint();
  Block jz = Block::Zero(dim, dim);
  for (int k = 0; k <= n; ++k) jz(k, k) = 0.5 * (n - 2 * k);

  const Block jx = (raise + lower) / 2.0;
  const Block jy = Complex(0.0, -0.5) * (raise - lower);
  switch (axis) {
    case JAxis::x:
      return jx;
    case JAxis::y:
      return jy;
    case JAxis::z:
      return jz;
    case JAxis::squared:
      return jx * jx + jy * jy + jz * jz;
  }
  throw DomainError("unknown J axis");
}

BlockObservable j_operator(JAxis axis, int max_n) {
  std::vector<Block> blocks;
  for (int n = 0; n <= max_n; ++n) blocks.push_back(build_j_operator(axis, n));
  return BlockObservable(std::move(blocks));
}

BlockObservable number_a(int max_n) {
  std::vector<Block> blocks;
  for (int n = 0; n <= max_n; ++n) {
    Block b = Block::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) b(k, k) = n - k;
    blocks.push_back(std::move(b));
  }
  return BlockObservable(std::move(blocks));
}

BlockObservable number_b(int max_n) {
  std::vector<Block> blocks;
  for (int n = 0; n <= max_n; ++n) {
    Block b = Block::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) b(k, k) = k;
    blocks.push_back(std::move(b));
  }
  return BlockObservable(std::move(blocks));
}

BlockUnitary spectral_exponential(const BlockObservable& h, double scale) {
  std::vector<Block> blocks;
  blocks.reserve(h.max_n() + 1);
  for (int n = 0; n <= h.max_n(); ++n) {
    const Block& hb = h.block(n);
    // Diagonal blocks need no eigensolver and stay exactly diagonal.
    if (hb.isDiagonal(0.0)) {
      Block u = Block::Zero(n + 1, n + 1);
      for (int k = 0; k <= n; ++k) u(k, k) = std::exp(Complex(0.0, scale * hb(k, k).real()));
      blocks.push_back(std::move(u));
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Block> eig(hb);
    if (eig.info() != Eigen::Success) {
      throw ContractViolation("eigendecomposition failed on block " + std::to_string(n));
    }
    Eigen::VectorXcd phases(n + 1);
    for (int k = 0; k <= n; ++k) phases(k) = std::exp(Complex(0.0, scale * eig.eigenvalues()(k)));
    blocks.push_back(eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint());
  }
  return BlockUnitary(std::move(blocks));
}

TwoModeState apply(const BlockUnitary& u, const TwoModeState& s) {
  check_covers(u.max_n(), s, "apply");
  std::vector<Complex> out(s.amplitudes().begin(), s.amplitudes().end());
  for (int n = 0; n <= active_blocks(s); ++n) {
    Eigen::Map<Eigen::VectorXcd> dst(out.data() + block_offset(n), n + 1);
    dst = u.block(n) * block_view(s.amplitudes(), n);
  }
  return TwoModeState(s.cutoff(), std::move(out), s.truncation_tail());
}

std::vector<Complex> apply_observable(const BlockObservable& a, const TwoModeState& s) {
  check_covers(a.max_n(), s, "observable");
  std::vector<Complex> out(s.amplitudes().size());
  for (int n = 0; n <= active_blocks(s); ++n) {
    Eigen::Map<Eigen::VectorXcd> dst(out.data() + block_offset(n), n + 1);
    dst = a.block(n) * block_view(s.amplitudes(), n);
  }
  return out;
}

double expectation(const BlockObservable& a, const TwoModeState& s) {
  const auto a_psi = apply_observable(a, s);
  Complex acc{};
  const auto psi = s.amplitudes();
  for (std::size_t i = 0; i < psi.size(); ++i) acc += std::conj(psi[i]) * a_psi[i];
  return acc.real();
}

double variance(const BlockObservable& a, const TwoModeState& s) {
  // <A^2> - <A>^2 evaluated as |(A - <A>) psi|^2, which keeps full relative
  // precision when the variance is small compared with <A^2>.
  const auto a_psi = apply_observable(a, s);
  const auto psi = s.amplitudes();
  Complex first{};
  for (std::size_t i = 0; i < psi.size(); ++i) first += std::conj(psi[i]) * a_psi[i];
  const double mean = first.real();
  double var = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) var += std::norm(a_psi[i] - mean * psi[i]);
  if (var < 0.0 && var >= -kOperatorTol) return 0.0;
  return var;
}

double commutator_expectation(const BlockObservable& a, const BlockObservable& g,
                              const TwoModeState& s) {
  // <psi| i(AG - GA) |psi> = -2 Im <A psi | G psi> for Hermitian A, G.
  const auto a_psi = apply_observable(a, s);
  const auto g_psi = apply_observable(g, s);
  Complex overlap{};
  for (std::size_t i = 0; i < a_psi.size(); ++i) overlap += std::conj(a_psi[i]) * g_psi[i];
  return -2.0 * overlap.imag();
}

std::vector<double> probabilities(const TwoModeState& s) {
  std::vector<double> p;
  p.reserve(s.amplitudes().size());
  for (const auto& c : s.amplitudes()) p.push_back(std::norm(c));
  return p;
}

std::vector<FockIndex> fock_labels(int cutoff) {
  std::vector<FockIndex> labels;
  labels.reserve(fock_dimension(cutoff));
  for (int n = 0; n <= cutoff; ++n) {
    for (int k = 0; k <= n; ++k) labels.push_back({n - k, k});
  }
  return labels;
}

}  // namespace noonsim
