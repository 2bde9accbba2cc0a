#include "nrange/hrnr.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace nrange::hrnr {

using numkit::ComplexMatrix;
using planegeom::HalfPlane;
using planegeom::Polygon;

namespace {

struct SupportSample {
  double offset;  // lambda_{N-k+1} of Re(e^{-i theta} M)
  cplx touch;     // v* M v for the matching eigenvector: a point on the support line
};

class SupportOracle {
 public:
  SupportOracle(const ComplexMatrix& M, int k) : m_(M), k_(k), n_(M.dim()) {}

  SupportSample at(double theta) const {
    // Re(e^{-i theta} M) = (e^{-i theta} M + e^{i theta} M*) / 2
    const cplx phase = std::polar(1.0, -theta);
    ComplexMatrix b(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        b.at(i, j) = 0.5 * (phase * m_.at(i, j) + std::conj(phase * m_.at(j, i)));
    const numkit::EigenSystem es = numkit::hermitian_eigensystem(b);
    const int idx = n_ - k_;  // lambda_{N-k+1} in 1-based ascending order
    SupportSample s;
    s.offset = es.values[idx];
    cplx touch = 0.0;
    for (int i = 0; i < n_; ++i) {
      cplx mv = 0.0;
      for (int j = 0; j < n_; ++j) mv += m_.at(i, j) * es.vectors.at(j, idx);
      touch += std::conj(es.vectors.at(i, idx)) * mv;
    }
    s.touch = touch;
    return s;
  }

 private:
  const ComplexMatrix& m_;
  int k_;
  int n_;
};

}  // namespace

Polygon lambda_k_lisze(const ComplexMatrix& M, int k, SweepConfig cfg) {
  const int n = M.dim();
  if (k < 1 || k > n) throw PreconditionError("lambda_k_lisze: need 1 <= k <= n");
  if (cfg.n_theta < 16) throw PreconditionError("lambda_k_lisze: n_theta must be >= 16");

  const SupportOracle oracle(M, k);
  const double step = 2.0 * M_PI / cfg.n_theta;

  std::vector<std::pair<double, SupportSample>> samples;
  samples.reserve(static_cast<std::size_t>(cfg.n_theta) + 16);
  for (int j = 0; j < cfg.n_theta; ++j) {
    const double theta = j * step;
    samples.emplace_back(theta, oracle.at(theta));
  }

  if (cfg.refinement == SweepConfig::Refinement::adaptive) {
    long budget = static_cast<long>(cfg.refine_budget_factor) * cfg.n_theta;
    std::vector<std::pair<double, SupportSample>> extra;
    // Stack of intervals [lo, hi] whose endpoints have distant touch points.
    std::vector<std::array<std::pair<double, SupportSample>, 2>> stack;
    for (int j = 0; j < cfg.n_theta; ++j) {
      const auto& a = samples[j];
      auto b = samples[(j + 1) % cfg.n_theta];
      if (j + 1 == cfg.n_theta) b.first += 2.0 * M_PI;
      if (std::abs(a.second.touch - b.second.touch) > cfg.refine_point_tol)
        stack.push_back(std::array{a, b});
    }
    while (!stack.empty() && budget > 0) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (b.first - a.first <= cfg.refine_min_interval) continue;
      const double mid = 0.5 * (a.first + b.first);
      const SupportSample sm = oracle.at(mid);
      --budget;
      extra.emplace_back(mid, sm);
      const std::pair<double, SupportSample> msample{mid, sm};
      if (std::abs(a.second.touch - sm.touch) > cfg.refine_point_tol)
        stack.push_back(std::array{a, msample});
      if (std::abs(sm.touch - b.second.touch) > cfg.refine_point_tol)
        stack.push_back(std::array{msample, b});
    }
    samples.insert(samples.end(), extra.begin(), extra.end());
  }

  std::vector<HalfPlane> planes;
  planes.reserve(samples.size());
  for (const auto& [theta, s] : samples)
    planes.push_back(HalfPlane{std::fmod(theta, 2.0 * M_PI), s.offset});

  const double radius = 4.0 * M.frobenius_norm() + 1.0;
  return planegeom::intersect_halfplanes(planes, radius);
}

Polygon lambda_k_normal(std::span<const cplx> z, int k) {
  const int n = static_cast<int>(z.size());
  if (k < 1 || k > n) throw PreconditionError("lambda_k_normal: need 1 <= k <= N");
  if (n > 20) throw BudgetError("lambda_k_normal: subset enumeration limited to N <= 20");
  if (k == 1) return planegeom::convex_hull(z);

  const int m = n - k + 1;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;

  Polygon acc;
  bool first = true;
  std::vector<cplx> subset(m);
  while (true) {
    for (int i = 0; i < m; ++i) subset[i] = z[idx[i]];
    const Polygon hull = planegeom::convex_hull(subset);
    if (first) {
      acc = hull;
      first = false;
    } else {
      acc = planegeom::intersect_polygons(acc, hull);
    }
    if (acc.is_empty()) return acc;
    // next combination
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return acc;
}

RealInterval lambda_k_hermitian(std::span<const double> a_sorted, int k) {
  const int n = static_cast<int>(a_sorted.size());
  if (k < 1 || k > n) throw PreconditionError("lambda_k_hermitian: need 1 <= k <= N");
  if (!std::is_sorted(a_sorted.begin(), a_sorted.end()))
    throw PreconditionError("lambda_k_hermitian: input must be ascending");
  RealInterval r;
  const double lo = a_sorted[k - 1];
  const double hi = a_sorted[n - k];
  if (hi < lo) return r;  // empty
  r.empty = false;
  r.lo = lo;
  r.hi = hi;
  return r;
}

}  // namespace nrange::hrnr
