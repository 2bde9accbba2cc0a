#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "nrange/numkit.hpp"
#include "nrange/planegeom.hpp"
#include "nrange/rng.hpp"

namespace nrange::bset {

/// Point of the standard simplex: nonnegative weights summing to one.
struct SimplexPoint {
  std::vector<double> t;

  static constexpr double kSupportTol = 1e-12;
  std::vector<int> support(double tol = kSupportTol) const;
};

/// One extreme point of the fiber C(a), tagged by the eigenvalue triple whose
/// barycentric solve produced it (entries outside the triple are zero; the
/// support may be smaller than three when a sits on a chord or vertex).
struct FiberExtremePoint {
  SimplexPoint point;
  std::array<int, 3> triple;
};

/// The fiber C(a) = { t in simplex : sum t_j z_j = a }, described by its
/// extreme points.
struct FiberPolytope {
  cplx a;
  int n = 0;
  std::vector<FiberExtremePoint> extreme;
};

/// Extreme points of C(a) by solving the 3x3 barycentric system for every
/// eigenvalue triple and keeping the nonnegative solutions. Requires the
/// genericity assumption (no three eigenvalues collinear) and a in conv{z}.
FiberPolytope fiber_extreme_points(std::span<const cplx> z, cplx a);

/// Discretized planar curve with its parameter grid; endpoint tags name the
/// eigenvalue indices the curve limits into at r = 0 and r = 1.
struct CurveTrace {
  std::vector<double> r;
  std::vector<cplx> pts;
  int tag_r0 = -1;
  int tag_r1 = -1;
};

/// Rational boundary curve attached to a convex quadrilateral and a base
/// point a strictly inside one of its four diagonal quadrants.
///
/// lab maps curve roles to quadrilateral indices: a lies in the quadrant of
/// the ccw-adjacent pair (lab[0], lab[1]); the curve runs through the
/// opposite quadrant from z[lab[3]] (r = 0) to z[lab[2]] (r = 1).
struct QuadCurve {
  std::array<cplx, 4> z;
  std::array<int, 4> lab;
  std::array<double, 4> x, y;  // fiber extremes t(lab0,lab1,lab2), t(lab0,lab1,lab3)
  cplx q;                      // diagonal intersection

  cplx eval(double r) const;                      // b(r); limits at the ends
  std::array<double, 4> t_of(double r) const;     // (1-r) x + r y
  CurveTrace trace(int m) const;                  // uniform m+1 point grid
  /// Refined polyline whose chords deviate from the curve by at most max_dev.
  std::vector<cplx> adaptive_polyline(double max_dev) const;
};

/// Build the curve data; throws when the quadrilateral is not convex ccw or
/// when a lies on the diagonal/side grid (within 1e-10), where the case
/// analysis applies instead.
QuadCurve make_quad_curve(const std::array<cplx, 4>& z4, cplx a);

/// The matching-set curve for four eigenvalues, as a uniform trace.
CurveTrace b_curve(const std::array<cplx, 4>& z4, cplx a, int m);

enum class BKind {
  empty_set,
  point_set,
  segment_set,
  triangle_set,
  curve_set,
  t_shape,
  diagonal_cross,
  wedge_union,
  cloud_set,
  hull_set,
};

struct BComponent {
  enum class Shape { region, curve, curve_hull, cloud } shape = Shape::region;
  planegeom::Polygon poly;   // region, or the filled hull of a curve_hull
  CurveTrace curve;          // curve / curve_hull
  std::vector<cplx> cloud;   // cloud
};

struct BDescription {
  BKind kind = BKind::empty_set;
  std::vector<BComponent> components;
};

/// Distance from p to the described set (0 when inside a filled component).
double distance_to(const BComponent& c, cplx p);
double distance_to(const BDescription& d, cplx p);
bool contains(const BDescription& d, cplx p, double tol);

struct BsetOptions {
  int cloud_samples = 2000;
  std::uint64_t seed = 1;
};

/// The matching set B(a,t) for a single fiber point, dispatched on the size
/// of the support: hull of the complementary eigenvalues for supports up to
/// three; the quadrilateral curve construction for support four (a single
/// point when N = 4); a Monte Carlo cloud for supports of five or more.
BComponent b_of_a_t(std::span<const cplx> z, const SimplexPoint& t, cplx a,
                    const BsetOptions& opt = {});

/// Exact case analysis for three non-collinear eigenvalues.
BDescription b_of_a_N3(const std::array<cplx, 3>& z3, cplx a);

/// Exact case analysis for a convex ccw quadrilateral of eigenvalues:
/// curve / opposite side / opposite triangle / T-shape / diagonal cross.
BDescription b_of_a_N4(const std::array<cplx, 4>& z4, cplx a, int m = 512);

/// The five-eigenvalue starfish: boundary curves beta_k and their wedges
/// conv{beta_k, z_k}, for a strictly inside the inner pentagon.
BDescription starfish(const std::array<cplx, 5>& z5, cplx a, int m = 256);

struct BsetSamples {
  std::vector<cplx> b;
  // Witness pairs (u, w), kept only on request: diag((Mu,u),(Mw,w)) is a
  // verified compression of diag(z) for every sample.
  std::vector<std::vector<cplx>> u;
  std::vector<std::vector<cplx>> w;
};

/// Monte Carlo sampler of B(a): Dirichlet mixtures of the fiber extreme
/// points for t, u = sqrt(t), and w drawn Gaussian in the orthogonal
/// complement of {u, u o Re z, u o Im z}. Deterministic for a fixed seed.
BsetSamples sample_b_of_a(std::span<const cplx> z, cplx a, int n_samples, std::uint64_t seed,
                          bool keep_witnesses = false);

struct LipschitzReport {
  double K = 0.0;
  std::array<int, 3> worst_triple{-1, -1, -1};
  bool ill_conditioned = false;  // K above 1e6 (near-collinear triple)
};

/// Lipschitz constant for a -> C(a): max operator norm of T^{-1} over all
/// eigenvalue triples, via the smallest singular value of the 3x3 system.
LipschitzReport fiber_lipschitz_constant(std::span<const cplx> z);

/// Exact distance from p to the grid: the union of all segments [z_i, z_j].
double grid_distance(std::span<const cplx> z, cplx p);

struct ContinuityRow {
  cplx a_n;
  double dist_to_a = 0.0;
  double d_forward = 0.0;   // directed Hausdorff estimate B(a_n) -> B(a)
  double d_backward = 0.0;  // directed Hausdorff estimate B(a) -> B(a_n)
  double d_h = 0.0;
};

struct ContinuityReport {
  cplx a;
  double grid_dist = 0.0;
  bool on_grid = false;  // within 1e-9 of some [z_i, z_j]
  std::vector<ContinuityRow> rows;
};

/// Sampled-cloud continuity probe of a -> B(a) along the sequence a_n.
ContinuityReport continuity_probe(std::span<const cplx> z, cplx a, std::span<const cplx> a_seq,
                                  int n_samples, std::uint64_t seed);

}  // namespace nrange::bset
