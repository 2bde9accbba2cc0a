#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nrange/common.hpp"
#include "nrange/rng.hpp"

namespace nrange::numkit {

/// Dense square complex matrix, row-major storage. Dimensions are small
/// (2 <= n <= 64) throughout the library, so no effort is spent on blocking
/// or expression templates.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(std::span<const cplx> d);
  static ComplexMatrix diagonal(std::span<const double> d);

  int dim() const { return n_; }
  cplx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const cplx& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix scaled(cplx alpha) const;

  cplx trace() const;
  double frobenius_norm() const;

  bool is_hermitian(double tol) const { return hermitian_defect() <= tol; }
  bool is_normal(double tol) const { return normality_defect() <= tol; }
  /// ||M - M*||_F
  double hermitian_defect() const;
  /// ||M M* - M* M||_F
  double normality_defect() const;

  const std::vector<cplx>& data() const { return a_; }

 private:
  int n_ = 0;
  std::vector<cplx> a_;
};

/// k orthonormal column vectors in C^n, spanning a compression subspace.
class Frame {
 public:
  Frame() = default;
  Frame(int n, int k) : n_(n), k_(k), cols_(static_cast<std::size_t>(n) * k) {}

  int ambient_dim() const { return n_; }
  int rank() const { return k_; }

  cplx& at(int i, int j) { return cols_[static_cast<std::size_t>(j) * n_ + i]; }
  const cplx& at(int i, int j) const { return cols_[static_cast<std::size_t>(j) * n_ + i]; }

  std::span<cplx> col(int j) { return {cols_.data() + static_cast<std::size_t>(j) * n_, static_cast<std::size_t>(n_)}; }
  std::span<const cplx> col(int j) const {
    return {cols_.data() + static_cast<std::size_t>(j) * n_, static_cast<std::size_t>(n_)};
  }

  /// ||F*F - I_k||_F
  double orthonormality_defect() const;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<cplx> cols_;  // column-major
};

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unit eigenvector columns, matching order
};

/// Eigenvalues of a Hermitian matrix, ascending. Implemented with cyclic
/// complex Jacobi rotations, iterated until the off-diagonal Frobenius norm
/// drops below 1e-13; guaranteed convergence and no dependencies, which is
/// all that is needed at n <= 64.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& H,
                                          const Tolerances& tol = default_tolerances());

/// Same solver, also accumulating the eigenvectors.
EigenSystem hermitian_eigensystem(const ComplexMatrix& H,
                                  const Tolerances& tol = default_tolerances());

/// Orthonormal basis of the orthogonal complement of span(vectors) in C^n.
/// Rank-deficient and dependent inputs are fine: the span is extracted by
/// pivoted Gram-Schmidt with drop tolerance 1e-12. The complement may be the
/// zero space, in which case the returned frame has rank 0.
Frame orthonormal_complement_basis(const std::vector<std::vector<cplx>>& vectors, int n);

/// F* M F, the compression of M to the subspace spanned by the frame columns.
ComplexMatrix compress(const ComplexMatrix& M, const Frame& F);

/// Haar-distributed random frame: QR orthonormalization (modified
/// Gram-Schmidt, positive R diagonal) of an n-by-k matrix of independent
/// complex standard Gaussians. Deterministic for a fixed seed.
Frame haar_random_frame(int n, int k, std::uint64_t seed);
Frame haar_random_frame(int n, int k, SeededRng& rng);

}  // namespace nrange::numkit
