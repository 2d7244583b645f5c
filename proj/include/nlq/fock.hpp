#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "nlq/errors.hpp"

namespace nlq {

using Complex = std::complex<double>;
using SparseOp = Eigen::SparseMatrix<Complex>;

// Composite truncated Fock space. Mode ordering is fixed at construction and
// defines the tensor-product order: basis states are occupation tuples
// (n_0, ..., n_{M-1}) indexed lexicographically with mode 0 slowest.
class FockBasis {
 public:
  explicit FockBasis(std::vector<int> truncations)
      : truncations_(std::move(truncations)) {
    if (truncations_.empty())
      throw invalid_truncation_error("FockBasis needs at least one mode");
    for (std::size_t m = 0; m < truncations_.size(); ++m)
      if (truncations_[m] < 1)
        throw invalid_truncation_error("truncation n_max must be >= 1 (mode " +
                                       std::to_string(m) + ")");
    strides_.resize(truncations_.size());
    long d = 1;
    for (int m = static_cast<int>(truncations_.size()) - 1; m >= 0; --m) {
      strides_[m] = d;
      d *= truncations_[m] + 1;
    }
    dim_ = d;
    if (dim_ < 2) throw invalid_truncation_error("composite dimension must be >= 2");
  }

  int mode_count() const { return static_cast<int>(truncations_.size()); }
  int truncation(int mode) const { return truncations_.at(mode); }
  const std::vector<int>& truncations() const { return truncations_; }
  long dim() const { return dim_; }
  long stride(int mode) const { return strides_.at(mode); }

  long index_of(const std::vector<int>& occupations) const {
    if (occupations.size() != truncations_.size())
      throw dimension_error("occupation tuple has wrong mode count");
    long idx = 0;
    for (std::size_t m = 0; m < occupations.size(); ++m) {
      if (occupations[m] < 0 || occupations[m] > truncations_[m])
        throw index_error("occupation " + std::to_string(occupations[m]) +
                          " out of range for mode " + std::to_string(m) +
                          " (n_max = " + std::to_string(truncations_[m]) + ")");
      idx += occupations[m] * strides_[m];
    }
    return idx;
  }

  std::vector<int> occupations_of(long index) const {
    if (index < 0 || index >= dim_) throw index_error("basis index out of range");
    std::vector<int> occ(truncations_.size());
    for (std::size_t m = 0; m < truncations_.size(); ++m) {
      occ[m] = static_cast<int>(index / strides_[m]);
      index %= strides_[m];
    }
    return occ;
  }

 private:
  std::vector<int> truncations_;
  std::vector<long> strides_;
  long dim_ = 0;
};

inline double max_abs(const SparseOp& m) {
  double v = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseOp::InnerIterator it(m, k); it; ++it)
      v = std::max(v, std::abs(it.value()));
  return v;
}

inline SparseOp adjoint(const SparseOp& m) { return SparseOp(m.adjoint()); }

// max|M - M†|; zero for an exactly hermitian matrix.
inline double hermiticity_residual(const SparseOp& m) {
  return max_abs(SparseOp(m - SparseOp(m.adjoint())));
}

// Sparse operator over a FockBasis. hermitian_hint is metadata set by
// builders that produce hermitian operators by construction; it is verified
// against max|M - M†| <= 1e-12 max|M| whenever set.
struct OperatorMatrix {
  SparseOp matrix;
  bool hermitian_hint = false;

  OperatorMatrix() = default;
  explicit OperatorMatrix(SparseOp m, bool hermitian = false)
      : matrix(std::move(m)), hermitian_hint(hermitian) {
    if (matrix.rows() != matrix.cols())
      throw dimension_error("operator matrix must be square");
    if (hermitian_hint) {
      const double scale = max_abs(matrix);
      if (hermiticity_residual(matrix) > 1e-12 * (scale > 0 ? scale : 1.0))
        throw numeric_error("operator marked hermitian fails hermiticity check");
    }
  }

  long dim() const { return matrix.rows(); }
};

inline OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y) {
  if (x.dim() != y.dim()) throw dimension_error("operator product: dimension mismatch");
  return OperatorMatrix(SparseOp(x.matrix * y.matrix));
}

inline OperatorMatrix operator+(const OperatorMatrix& x, const OperatorMatrix& y) {
  if (x.dim() != y.dim()) throw dimension_error("operator sum: dimension mismatch");
  return OperatorMatrix(SparseOp(x.matrix + y.matrix),
                        x.hermitian_hint && y.hermitian_hint);
}

inline OperatorMatrix operator-(const OperatorMatrix& x, const OperatorMatrix& y) {
  if (x.dim() != y.dim()) throw dimension_error("operator difference: dimension mismatch");
  return OperatorMatrix(SparseOp(x.matrix - y.matrix),
                        x.hermitian_hint && y.hermitian_hint);
}

inline OperatorMatrix operator*(Complex c, const OperatorMatrix& x) {
  return OperatorMatrix(SparseOp(c * x.matrix),
                        x.hermitian_hint && c.imag() == 0.0);
}

inline OperatorMatrix operator*(double c, const OperatorMatrix& x) {
  return OperatorMatrix(SparseOp(c * x.matrix), x.hermitian_hint);
}

inline OperatorMatrix adjoint(const OperatorMatrix& x) {
  return OperatorMatrix(SparseOp(x.matrix.adjoint()), x.hermitian_hint);
}

inline SparseOp commutator(const SparseOp& x, const SparseOp& y) {
  if (x.rows() != y.rows()) throw dimension_error("commutator: dimension mismatch");
  return SparseOp(x * y - y * x);
}

inline OperatorMatrix identity_op(long dim) {
  SparseOp id(dim, dim);
  id.setIdentity();
  return OperatorMatrix(std::move(id), true);
}

struct LadderPair {
  OperatorMatrix a;
  OperatorMatrix a_dag;
};

// Single-mode ladder operators with hard cutoff: a|0> = 0 and a†|n_max> = 0,
// so [a, a†] = 1 on occupations < n_max and -n_max at the cutoff.
inline LadderPair make_ladder(int n_max) {
  if (n_max < 1) throw invalid_truncation_error("make_ladder: n_max must be >= 1");
  const int dim = n_max + 1;
  SparseOp a(dim, dim);
  a.reserve(Eigen::VectorXi::Constant(dim, 1));
  for (int n = 1; n <= n_max; ++n) a.insert(n - 1, n) = std::sqrt(double(n));
  a.makeCompressed();
  SparseOp a_dag = SparseOp(a.adjoint());
  return {OperatorMatrix(std::move(a)), OperatorMatrix(std::move(a_dag))};
}

// diag(0, 1, ..., n_max)
inline OperatorMatrix number_operator(int n_max) {
  if (n_max < 1) throw invalid_truncation_error("number_operator: n_max must be >= 1");
  const int dim = n_max + 1;
  SparseOp n(dim, dim);
  n.reserve(Eigen::VectorXi::Constant(dim, 1));
  for (int k = 1; k <= n_max; ++k) n.insert(k, k) = double(k);
  n.makeCompressed();
  return OperatorMatrix(std::move(n), true);
}

// I ⊗ ... ⊗ op ⊗ ... ⊗ I with op acting on the given mode slot.
inline OperatorMatrix embed(const OperatorMatrix& op, int mode_index,
                            const FockBasis& basis) {
  if (mode_index < 0 || mode_index >= basis.mode_count())
    throw index_error("embed: mode index out of range");
  const long want = basis.truncation(mode_index) + 1;
  if (op.dim() != want)
    throw dimension_error("embed: operator dimension " + std::to_string(op.dim()) +
                          " does not match mode dimension " + std::to_string(want));
  long left = 1, right = 1;
  for (int m = 0; m < mode_index; ++m) left *= basis.truncation(m) + 1;
  for (int m = mode_index + 1; m < basis.mode_count(); ++m)
    right *= basis.truncation(m) + 1;

  SparseOp id_left(left, left), id_right(right, right);
  id_left.setIdentity();
  id_right.setIdentity();
  SparseOp mid = Eigen::kroneckerProduct(id_left, op.matrix).eval();
  SparseOp full = Eigen::kroneckerProduct(mid, id_right).eval();
  full.makeCompressed();
  return OperatorMatrix(std::move(full), op.hermitian_hint);
}

// Dense state over a FockBasis; normalized at construction.
struct QuantumState {
  Eigen::VectorXcd amplitudes;

  QuantumState() = default;
  explicit QuantumState(Eigen::VectorXcd amps) : amplitudes(std::move(amps)) {
    const double n = amplitudes.norm();
    if (!(n > 0.0)) throw numeric_error("cannot normalize a zero state vector");
    amplitudes /= n;
  }

  long dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
};

inline QuantumState number_state(const std::vector<int>& occupations,
                                 const FockBasis& basis) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.dim());
  v[basis.index_of(occupations)] = 1.0;
  return QuantumState(std::move(v));
}

struct CoherentState {
  QuantumState state;
  // Poisson weight left above the cutoff: 1 - Σ_{n<=n_max} e^{-|α|²}|α|^{2n}/n!
  double tail_mass = 0.0;
};

inline CoherentState coherent_state(Complex alpha, int n_max) {
  if (n_max < 1) throw invalid_truncation_error("coherent_state: n_max must be >= 1");
  Eigen::VectorXcd v(n_max + 1);
  // c_n = e^{-|α|²/2} α^n / √(n!), built by recurrence to avoid overflow
  Complex c = std::exp(-0.5 * std::norm(alpha));
  double kept = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    v[n] = c;
    kept += std::norm(c);
    c *= alpha / std::sqrt(double(n + 1));
  }
  CoherentState out;
  out.tail_mass = std::max(0.0, 1.0 - kept);
  out.state = QuantumState(std::move(v));
  return out;
}

inline Complex expectation(const QuantumState& state, const OperatorMatrix& op) {
  if (state.dim() != op.dim())
    throw dimension_error("expectation: state and operator dimensions differ");
  return state.amplitudes.dot(op.matrix * state.amplitudes);
}

}  // namespace nlq
