#pragma once

#include <span>

#include "nrange/numkit.hpp"
#include "nrange/planegeom.hpp"

namespace nrange::hrnr {

/// Angular sweep configuration for the half-plane formula.
///
/// Adaptive refinement bisects angular intervals whose supporting points
/// (numerical-range points achieved by the relevant eigenvector) differ by
/// more than refine_point_tol. For normal matrices the supporting point is
/// piecewise constant in the angle, so this triggers exactly at the switch
/// angles where a coarse uniform grid would clip corners.
struct SweepConfig {
  int n_theta = 4096;
  enum class Refinement { none, adaptive } refinement = Refinement::adaptive;
  double refine_point_tol = 1e-6;
  double refine_min_interval = 1e-12;  // radians; bisection floor
  int refine_budget_factor = 8;        // extra evaluations <= factor * n_theta
};

/// Rank-k numerical range of an arbitrary matrix via the angular sweep of
/// supporting half-planes. The result is an outer approximation converging
/// as the grid refines; the empty set is a legal outcome.
planegeom::Polygon lambda_k_lisze(const numkit::ComplexMatrix& M, int k, SweepConfig cfg = {});

/// Rank-k numerical range of a normal matrix with the given eigenvalues:
/// exact intersection of convex hulls over all (N choose N-k+1) eigenvalue
/// subsets, folded pairwise. N <= 20.
planegeom::Polygon lambda_k_normal(std::span<const cplx> z, int k);

struct RealInterval {
  bool empty = true;
  double lo = 0.0, hi = 0.0;  // lo == hi encodes a single point
};

/// Closed form for Hermitian spectra: [a_k, a_{N-k+1}], empty when reversed.
RealInterval lambda_k_hermitian(std::span<const double> a_sorted, int k);

}  // namespace nrange::hrnr
