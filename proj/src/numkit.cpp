#include "nrange/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace nrange::numkit {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  ComplexMatrix m(n_);
  for (int i = 0; i < n_; ++i) {
    for (int l = 0; l < n_; ++l) {
      const cplx ail = at(i, l);
      if (ail == cplx{}) continue;
      for (int j = 0; j < n_; ++j) m.at(i, j) += ail * rhs.at(l, j);
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  ComplexMatrix m(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + rhs.a_[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  ComplexMatrix m(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - rhs.a_[i];
  return m;
}

ComplexMatrix ComplexMatrix::scaled(cplx alpha) const {
  ComplexMatrix m(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = alpha * a_[i];
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const { return (*this - adjoint()).frobenius_norm(); }

double ComplexMatrix::normality_defect() const {
  const ComplexMatrix adj = adjoint();
  return ((*this) * adj - adj * (*this)).frobenius_norm();
}

double Frame::orthonormality_defect() const {
  double s = 0.0;
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) {
      cplx g = 0.0;
      for (int r = 0; r < n_; ++r) g += std::conj(at(r, i)) * at(r, j);
      if (i == j) g -= 1.0;
      s += std::norm(g);
    }
  }
  return std::sqrt(s);
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a.at(i, j));
  return std::sqrt(s);
}

// One cyclic Jacobi pass; returns the rotation count.
int jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v) {
  const int n = a.dim();
  int rotations = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const cplx apq = a.at(p, q);
      const double mag = std::abs(apq);
      if (mag < 1e-300) continue;
      ++rotations;
      const cplx omega = apq / mag;       // phase of the pivot
      const double app = a.at(p, p).real();
      const double aqq = a.at(q, q).real();
      const double theta = (aqq - app) / (2.0 * mag);
      const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      // G restricted to (p,q) is [[c, s],[-conj(omega) s, conj(omega) c]].
      const cplx gpq = s, gqq = std::conj(omega) * c, gqp = -std::conj(omega) * s;
      // A <- A G (columns p,q)
      for (int i = 0; i < n; ++i) {
        const cplx aip = a.at(i, p), aiq = a.at(i, q);
        a.at(i, p) = c * aip + gqp * aiq;
        a.at(i, q) = gpq * aip + gqq * aiq;
      }
      // A <- G* A (rows p,q)
      for (int j = 0; j < n; ++j) {
        const cplx apj = a.at(p, j), aqj = a.at(q, j);
        a.at(p, j) = c * apj + std::conj(gqp) * aqj;
        a.at(q, j) = std::conj(gpq) * apj + std::conj(gqq) * aqj;
      }
      // V <- V G
      for (int i = 0; i < n; ++i) {
        const cplx vip = v.at(i, p), viq = v.at(i, q);
        v.at(i, p) = c * vip + gqp * viq;
        v.at(i, q) = gpq * vip + gqq * viq;
      }
      a.at(p, q) = 0.0;
      a.at(q, p) = 0.0;
    }
  }
  return rotations;
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& H, const Tolerances& tol) {
  const double defect = H.hermitian_defect();
  if (defect > tol.hermitian) {
    std::ostringstream os;
    os << "hermitian_eigensystem: input is not Hermitian, ||H - H*||_F = " << defect;
    throw PreconditionError(os.str());
  }
  const int n = H.dim();
  ComplexMatrix a = H;
  // Work on the Hermitian average so the tolerated defect cannot bias pivots.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = 0.5 * (H.at(i, j) + std::conj(H.at(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) <= kOffTol) break;
    jacobi_sweep(a, v);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a.at(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, order[j]);
  }

  const double tr = H.trace().real();
  const double sum = std::accumulate(out.values.begin(), out.values.end(), 0.0);
  if (std::abs(sum - tr) > 1e-9 * n) {
    std::ostringstream os;
    os << "hermitian_eigensystem: eigenvalue sum " << sum << " disagrees with trace " << tr;
    throw VerificationError(os.str());
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& H, const Tolerances& tol) {
  return hermitian_eigensystem(H, tol).values;
}

namespace {

void project_out(std::vector<cplx>& v, const std::vector<std::vector<cplx>>& basis) {
  for (const auto& q : basis) {
    cplx ip = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) ip += std::conj(q[i]) * v[i];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= ip * q[i];
  }
}

double vec_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

// Pivoted Gram-Schmidt pass over the candidates; vectors whose residual is
// below droptol are discarded. Appends to `basis` until exhaustion or until
// basis reaches max_rank.
void extend_basis(std::vector<std::vector<cplx>>& basis, std::vector<std::vector<cplx>> candidates,
                  double droptol, std::size_t max_rank) {
  while (basis.size() < max_rank) {
    double best = 0.0;
    std::size_t best_idx = candidates.size();
    std::vector<std::vector<cplx>> projected = candidates;
    for (std::size_t i = 0; i < projected.size(); ++i) {
      project_out(projected[i], basis);
      const double nrm = vec_norm(projected[i]);
      if (nrm > best + 1e-15) {
        best = nrm;
        best_idx = i;
      }
    }
    if (best_idx == candidates.size() || best <= droptol) break;
    auto v = std::move(projected[best_idx]);
    // Second orthogonalization pass tightens the defect to machine precision.
    project_out(v, basis);
    const double nrm = vec_norm(v);
    if (nrm <= droptol) break;
    for (auto& x : v) x /= nrm;
    basis.push_back(std::move(v));
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best_idx));
  }
}

}  // namespace

Frame orthonormal_complement_basis(const std::vector<std::vector<cplx>>& vectors, int n) {
  if (n < 1) throw PreconditionError("orthonormal_complement_basis: n must be >= 1");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n)
      throw PreconditionError("orthonormal_complement_basis: vector dimension mismatch");

  constexpr double kDrop = 1e-12;
  std::vector<std::vector<cplx>> span_basis;
  extend_basis(span_basis, vectors, kDrop, static_cast<std::size_t>(n));
  const std::size_t rank = span_basis.size();

  std::vector<std::vector<cplx>> full = span_basis;
  std::vector<std::vector<cplx>> unit(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    unit[j].assign(static_cast<std::size_t>(n), 0.0);
    unit[j][j] = 1.0;
  }
  extend_basis(full, std::move(unit), kDrop, static_cast<std::size_t>(n));

  const int k = static_cast<int>(full.size() - rank);
  Frame f(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) f.at(i, j) = full[rank + j][i];
  return f;
}

ComplexMatrix compress(const ComplexMatrix& M, const Frame& F) {
  if (F.ambient_dim() != M.dim())
    throw PreconditionError("compress: frame ambient dimension does not match matrix");
  const int n = M.dim(), k = F.rank();
  // MF, then F*(MF)
  std::vector<cplx> mf(static_cast<std::size_t>(n) * k, 0.0);
  for (int j = 0; j < k; ++j) {
    auto c = F.col(j);
    for (int i = 0; i < n; ++i) {
      cplx s = 0.0;
      for (int l = 0; l < n; ++l) s += M.at(i, l) * c[l];
      mf[static_cast<std::size_t>(j) * n + i] = s;
    }
  }
  ComplexMatrix out(k);
  for (int i = 0; i < k; ++i) {
    auto ci = F.col(i);
    for (int j = 0; j < k; ++j) {
      cplx s = 0.0;
      for (int l = 0; l < n; ++l) s += std::conj(ci[l]) * mf[static_cast<std::size_t>(j) * n + l];
      out.at(i, j) = s;
    }
  }
  return out;
}

Frame haar_random_frame(int n, int k, SeededRng& rng) {
  if (k < 1 || k > n) throw PreconditionError("haar_random_frame: need 1 <= k <= n");
  // Column-major Gaussian fill, then modified Gram-Schmidt. MGS produces a
  // positive R diagonal, which is exactly the phase fixing that makes the
  // resulting Q Haar-distributed.
  std::vector<std::vector<cplx>> cols(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    cols[j].resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cols[j][i] = cplx(rng.gaussian(), rng.gaussian());
  }
  std::vector<std::vector<cplx>> q;
  for (int j = 0; j < k; ++j) {
    auto v = cols[j];
    project_out(v, q);
    project_out(v, q);
    const double nrm = vec_norm(v);
    if (nrm < 1e-12) throw VerificationError("haar_random_frame: degenerate Gaussian draw");
    for (auto& x : v) x /= nrm;
    q.push_back(std::move(v));
  }
  Frame f(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) f.at(i, j) = q[j][i];
  return f;
}

Frame haar_random_frame(int n, int k, std::uint64_t seed) {
  SeededRng rng(seed);
  return haar_random_frame(n, k, rng);
}

}  // namespace nrange::numkit
