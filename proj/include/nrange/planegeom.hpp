#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nrange/common.hpp"

namespace nrange::planegeom {

/// Closed convex planar region. Degenerate shapes are first class: rank-k
/// numerical ranges of Hermitian matrices are intervals and matching sets are
/// frequently segments, so emptiness / point / segment cases carry explicit
/// kind tags instead of being encoded in the vertex count by convention.
enum class PolyKind { empty, point, segment, polygon };

struct Polygon {
  PolyKind kind = PolyKind::empty;
  std::vector<cplx> v;  // ccw for kind==polygon; 2 endpoints for segment; 1 for point

  static Polygon empty_set() { return {}; }
  static Polygon single(cplx p) { return {PolyKind::point, {p}}; }
  static Polygon seg(cplx a, cplx b) { return {PolyKind::segment, {a, b}}; }

  bool is_empty() const { return kind == PolyKind::empty; }
};

/// The half-plane e^{i theta} { z : Re(z) <= c }; a point w belongs iff
/// Re(e^{-i theta} w) <= c.
struct HalfPlane {
  double theta = 0.0;  // [0, 2pi)
  double c = 0.0;

  double signed_dist(cplx w) const;  // <= 0 inside
};

enum class Location { inside, boundary, outside };

/// cross(a,b) = Im(conj(a) * b): positive when b is ccw of a.
double cross(cplx a, cplx b);

/// Counterclockwise convex hull. Duplicates and interior points are removed;
/// collinear input collapses to a segment (or point). Cross products below
/// 1e-12 are treated as collinear; inputs are O(1)-scaled eigenvalues, so the
/// tolerance is absolute.
Polygon convex_hull(std::span<const cplx> points);

/// Intersection of half-planes, computed by incrementally clipping a bounding
/// square of the given radius. The result is convex and possibly degenerate;
/// a region that collapses below diameter 1e-9 is reported as a point, and
/// emptiness means the constraints actually eliminated the region.
Polygon intersect_halfplanes(std::span<const HalfPlane> planes, double bound_radius);

/// Convex intersection of two (possibly degenerate) convex regions.
Polygon intersect_polygons(const Polygon& a, const Polygon& b);

struct SegmentIntersection {
  enum class Kind { none, point, overlap } kind = Kind::none;
  cplx p;         // kind == point
  cplx a, b;      // kind == overlap: endpoints of the shared segment
};

/// Intersection of the closed segments [p1,p2] and [p3,p4]. Collinear
/// overlaps are reported as a distinct case; parallel disjoint segments give
/// none.
SegmentIntersection segment_intersection(cplx p1, cplx p2, cplx p3, cplx p4);

struct HausdorffResult {
  double forward;   // sup over A of dist to B
  double backward;  // sup over B of dist to A
  double distance;  // max of the two
};

/// Exact Hausdorff distances between finite point clouds (O(|A||B|)).
HausdorffResult hausdorff(std::span<const cplx> a, std::span<const cplx> b);

/// Convex containment with a signed-distance tolerance band of width tol.
Location point_in_polygon(cplx p, const Polygon& poly, double tol);

// --- small geometric helpers shared across modules ---

double polygon_area(const Polygon& p);          // shoelace; 0 for degenerate kinds
double polygon_diameter(const Polygon& p);      // max vertex distance
cplx polygon_vertex_mean(const Polygon& p);     // average of vertices (interior for convex)
double distance_point_segment(cplx p, cplx a, cplx b);
/// Euclidean distance from p to the region (0 when inside).
double distance_to_polygon(cplx p, const Polygon& poly);
/// Support value max Re(e^{-i theta} v) over the region's points.
double polygon_support(const Polygon& p, double theta);
/// Exact Hausdorff distance between convex regions (attained at vertices).
double polygon_hausdorff(const Polygon& a, const Polygon& b);

/// Membership for large convex polygons: O(log n) fan search. Exact same
/// semantics as point_in_polygon but requires kind==polygon with ccw order.
Location point_in_convex_fast(cplx p, const Polygon& poly, double tol);
/// Distance companion to point_in_convex_fast (0 when inside).
double distance_to_convex_fast(cplx p, const Polygon& poly);

}  // namespace nrange::planegeom
