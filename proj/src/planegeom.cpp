#include "nrange/planegeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nrange::planegeom {

namespace {

constexpr double kCollinearTol = 1e-12;  // cross-product collinearity threshold
constexpr double kBoundarySlack = 1e-12; // membership slack inside intersections
constexpr double kPointCollapse = 1e-9;  // regions thinner than this are points

double dot(cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); }

}  // namespace

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double HalfPlane::signed_dist(cplx w) const {
  return std::cos(theta) * w.real() + std::sin(theta) * w.imag() - c;
}

Polygon convex_hull(std::span<const cplx> points) {
  std::vector<cplx> pts(points.begin(), points.end());
  std::erase_if(pts, [](cplx p) { return !std::isfinite(p.real()) || !std::isfinite(p.imag()); });
  if (pts.empty()) return Polygon::empty_set();
  std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return Polygon::single(pts[0]);

  auto build = [&](auto begin, auto end) {
    std::vector<cplx> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross(chain.back() - chain[chain.size() - 2], *it - chain.back()) <= kCollinearTol)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<cplx> lower = build(pts.begin(), pts.end());
  std::vector<cplx> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());

  if (lower.size() == 1) return Polygon::single(lower[0]);
  if (lower.size() == 2) {
    if (std::abs(lower[0] - lower[1]) <= kCollinearTol) return Polygon::single(lower[0]);
    return Polygon::seg(lower[0], lower[1]);
  }
  return Polygon{PolyKind::polygon, std::move(lower)};
}

namespace {

// Sutherland-Hodgman step: keep the region where dist(p) <= 0.
template <typename Dist>
std::vector<cplx> clip_loop(const std::vector<cplx>& poly, Dist dist) {
  std::vector<cplx> out;
  const std::size_t m = poly.size();
  out.reserve(m + 2);
  for (std::size_t i = 0; i < m; ++i) {
    const cplx cur = poly[i];
    const cplx nxt = poly[(i + 1) % m];
    const double dc = dist(cur);
    const double dn = dist(nxt);
    if (dc <= 0.0) out.push_back(cur);
    if ((dc <= 0.0) != (dn <= 0.0)) {
      const double t = dc / (dc - dn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

double raw_diameter(const std::vector<cplx>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, std::abs(pts[i] - pts[j]));
  return d;
}

cplx raw_mean(const std::vector<cplx>& pts) {
  cplx s = 0.0;
  for (cplx p : pts) s += p;
  return s / static_cast<double>(pts.size());
}

// Collapse a raw clipped vertex loop into a canonical Polygon. Regions that
// shrank below kPointCollapse in diameter are points; everything else goes
// through the hull so orientation, duplicates and collinearity come out
// clean.
Polygon canonicalize(std::vector<cplx> pts) {
  if (pts.empty()) return Polygon::empty_set();
  if (raw_diameter(pts) < kPointCollapse) return Polygon::single(raw_mean(pts));
  return convex_hull(pts);
}

}  // namespace

Polygon intersect_halfplanes(std::span<const HalfPlane> planes, double bound_radius) {
  if (!(bound_radius > 0.0))
    throw PreconditionError("intersect_halfplanes: positive bounding radius required");
  const double r = bound_radius;
  std::vector<cplx> poly = {cplx(-r, -r), cplx(r, -r), cplx(r, r), cplx(-r, r)};
  for (const HalfPlane& hp : planes) {
    const double ct = std::cos(hp.theta), st = std::sin(hp.theta);
    poly = clip_loop(poly, [&](cplx w) { return ct * w.real() + st * w.imag() - hp.c; });
    if (poly.empty()) return Polygon::empty_set();
  }
  return canonicalize(std::move(poly));
}

SegmentIntersection segment_intersection(cplx p1, cplx p2, cplx p3, cplx p4) {
  SegmentIntersection res;
  const cplx d1 = p2 - p1, d2 = p4 - p3, r = p3 - p1;
  const double l1 = std::abs(d1), l2 = std::abs(d2);

  auto on_segment = [](cplx p, cplx a, cplx b) {
    return distance_point_segment(p, a, b) <= kCollinearTol;
  };
  if (l1 <= kCollinearTol && l2 <= kCollinearTol) {
    if (std::abs(p1 - p3) <= kCollinearTol) {
      res.kind = SegmentIntersection::Kind::point;
      res.p = p1;
    }
    return res;
  }
  if (l1 <= kCollinearTol || l2 <= kCollinearTol) {
    const cplx pt = (l1 <= kCollinearTol) ? p1 : p3;
    const cplx a = (l1 <= kCollinearTol) ? p3 : p1;
    const cplx b = (l1 <= kCollinearTol) ? p4 : p2;
    if (on_segment(pt, a, b)) {
      res.kind = SegmentIntersection::Kind::point;
      res.p = pt;
    }
    return res;
  }

  const double den = cross(d1, d2);
  if (std::abs(den) <= kCollinearTol) {
    if (std::abs(cross(r, d1)) / l1 > kCollinearTol) return res;  // parallel, distinct lines
    // collinear: overlap interval in the parameter of [p1,p2]
    const double inv = 1.0 / (l1 * l1);
    double t3 = dot(p3 - p1, d1) * inv;
    double t4 = dot(p4 - p1, d1) * inv;
    if (t3 > t4) std::swap(t3, t4);
    const double lo = std::max(0.0, t3), hi = std::min(1.0, t4);
    if (hi < lo - kCollinearTol) return res;
    if (hi - lo <= kCollinearTol) {
      res.kind = SegmentIntersection::Kind::point;
      res.p = p1 + 0.5 * (lo + hi) * d1;
      return res;
    }
    res.kind = SegmentIntersection::Kind::overlap;
    res.a = p1 + lo * d1;
    res.b = p1 + hi * d1;
    return res;
  }
  const double s = cross(r, d2) / den;
  const double t = cross(r, d1) / den;
  const double slack1 = kCollinearTol / l1, slack2 = kCollinearTol / l2;
  if (s < -slack1 || s > 1.0 + slack1 || t < -slack2 || t > 1.0 + slack2) return res;
  res.kind = SegmentIntersection::Kind::point;
  res.p = p1 + s * d1;
  return res;
}

namespace {

// Clip the closed segment [a,b] against a convex polygon (ccw).
Polygon clip_segment_by_polygon(cplx a, cplx b, const Polygon& poly) {
  double lo = 0.0, hi = 1.0;
  const std::size_t m = poly.v.size();
  for (std::size_t i = 0; i < m; ++i) {
    const cplx e0 = poly.v[i], e1 = poly.v[(i + 1) % m];
    const cplx dir = (e1 - e0) / std::abs(e1 - e0);
    // inward (ccw) normalized signed distance
    const double da = cross(dir, a - e0);
    const double db = cross(dir, b - e0);
    const double lo_allowed = -kBoundarySlack;
    if (std::abs(da - db) <= 1e-300) {
      if (da < lo_allowed) return Polygon::empty_set();
      continue;
    }
    const double t = (lo_allowed - da) / (db - da);
    if (db > da) {
      // distance increasing: constraint is t >= t_cross
      lo = std::max(lo, t);
    } else {
      hi = std::min(hi, t);
    }
    if (lo > hi + kBoundarySlack) return Polygon::empty_set();
  }
  if (lo > hi) return Polygon::single(a + 0.5 * (lo + hi) * (b - a));
  const cplx pa = a + lo * (b - a), pb = a + hi * (b - a);
  if (std::abs(pa - pb) <= kPointCollapse) return Polygon::single(0.5 * (pa + pb));
  return Polygon::seg(pa, pb);
}

}  // namespace

Polygon intersect_polygons(const Polygon& a, const Polygon& b) {
  if (a.is_empty() || b.is_empty()) return Polygon::empty_set();

  if (a.kind == PolyKind::point) {
    return point_in_polygon(a.v[0], b, kBoundarySlack) != Location::outside ? a
                                                                            : Polygon::empty_set();
  }
  if (b.kind == PolyKind::point) return intersect_polygons(b, a);

  if (a.kind == PolyKind::segment && b.kind == PolyKind::segment) {
    const SegmentIntersection si = segment_intersection(a.v[0], a.v[1], b.v[0], b.v[1]);
    switch (si.kind) {
      case SegmentIntersection::Kind::none:
        return Polygon::empty_set();
      case SegmentIntersection::Kind::point:
        return Polygon::single(si.p);
      case SegmentIntersection::Kind::overlap:
        return Polygon::seg(si.a, si.b);
    }
  }
  if (a.kind == PolyKind::segment) return clip_segment_by_polygon(a.v[0], a.v[1], b);
  if (b.kind == PolyKind::segment) return clip_segment_by_polygon(b.v[0], b.v[1], a);

  // polygon-polygon: clip a by each edge of b
  std::vector<cplx> poly = a.v;
  const std::size_t m = b.v.size();
  for (std::size_t i = 0; i < m && !poly.empty(); ++i) {
    const cplx e0 = b.v[i], e1 = b.v[(i + 1) % m];
    const cplx dir = (e1 - e0) / std::abs(e1 - e0);
    poly = clip_loop(poly, [&](cplx w) { return -cross(dir, w - e0) - kBoundarySlack; });
  }
  if (poly.empty()) return Polygon::empty_set();
  return canonicalize(std::move(poly));
}

HausdorffResult hausdorff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) throw PreconditionError("hausdorff: empty point cloud");
  auto directed = [](std::span<const cplx> x, std::span<const cplx> y) {
    double worst = 0.0;
    for (cplx p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (cplx q : y) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  HausdorffResult r{};
  r.forward = directed(a, b);
  r.backward = directed(b, a);
  r.distance = std::max(r.forward, r.backward);
  return r;
}

Location point_in_polygon(cplx p, const Polygon& poly, double tol) {
  switch (poly.kind) {
    case PolyKind::empty:
      return Location::outside;
    case PolyKind::point:
      return std::abs(p - poly.v[0]) <= tol ? Location::boundary : Location::outside;
    case PolyKind::segment:
      return distance_point_segment(p, poly.v[0], poly.v[1]) <= tol ? Location::boundary
                                                                    : Location::outside;
    case PolyKind::polygon:
      break;
  }
  double dmin = std::numeric_limits<double>::infinity();
  const std::size_t m = poly.v.size();
  for (std::size_t i = 0; i < m; ++i) {
    const cplx e0 = poly.v[i], e1 = poly.v[(i + 1) % m];
    const cplx dir = (e1 - e0) / std::abs(e1 - e0);
    dmin = std::min(dmin, cross(dir, p - e0));
  }
  if (dmin > tol) return Location::inside;
  if (dmin < -tol) return Location::outside;
  return Location::boundary;
}

double polygon_area(const Polygon& p) {
  if (p.kind != PolyKind::polygon) return 0.0;
  double s = 0.0;
  const std::size_t m = p.v.size();
  for (std::size_t i = 0; i < m; ++i) s += cross(p.v[i], p.v[(i + 1) % m]);
  return 0.5 * s;
}

double polygon_diameter(const Polygon& p) { return raw_diameter(p.v); }

cplx polygon_vertex_mean(const Polygon& p) {
  if (p.v.empty()) throw PreconditionError("polygon_vertex_mean: empty region");
  return raw_mean(p.v);
}

double distance_point_segment(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double l2 = std::norm(d);
  if (l2 <= 1e-300) return std::abs(p - a);
  const double t = std::clamp(dot(p - a, d) / l2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

double distance_to_polygon(cplx p, const Polygon& poly) {
  switch (poly.kind) {
    case PolyKind::empty:
      return std::numeric_limits<double>::infinity();
    case PolyKind::point:
      return std::abs(p - poly.v[0]);
    case PolyKind::segment:
      return distance_point_segment(p, poly.v[0], poly.v[1]);
    case PolyKind::polygon:
      break;
  }
  const std::size_t m = poly.v.size();
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    const cplx e0 = poly.v[i], e1 = poly.v[(i + 1) % m];
    if (cross(e1 - e0, p - e0) < 0.0) inside = false;
    best = std::min(best, distance_point_segment(p, e0, e1));
  }
  return inside ? 0.0 : best;
}

double polygon_support(const Polygon& p, double theta) {
  if (p.v.empty()) return -std::numeric_limits<double>::infinity();
  const double ct = std::cos(theta), st = std::sin(theta);
  double h = -std::numeric_limits<double>::infinity();
  for (cplx v : p.v) h = std::max(h, ct * v.real() + st * v.imag());
  return h;
}

double polygon_hausdorff(const Polygon& a, const Polygon& b) {
  if (a.is_empty() || b.is_empty())
    throw PreconditionError("polygon_hausdorff: empty region");
  // The distance-to-a-convex-set function is convex, so its maximum over a
  // convex region is attained at a vertex; vertex scans are exact here.
  double d = 0.0;
  for (cplx v : a.v) d = std::max(d, distance_to_polygon(v, b));
  for (cplx v : b.v) d = std::max(d, distance_to_polygon(v, a));
  return d;
}

Location point_in_convex_fast(cplx p, const Polygon& poly, double tol) {
  if (poly.kind != PolyKind::polygon) return point_in_polygon(p, poly, tol);
  const double d = distance_to_convex_fast(p, poly);
  if (d > 0.0) return d <= tol ? Location::boundary : Location::outside;
  // Inside the hull; measure the distance to the boundary only when the
  // point might be within the tolerance band.
  double dmin = std::numeric_limits<double>::infinity();
  const std::size_t m = poly.v.size();
  // fan binary search around the first vertex
  const cplx o = poly.v[0];
  std::size_t lo = 1, hi = m - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (cross(poly.v[mid] - o, p - o) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  for (std::size_t i = (lo >= 2 ? lo - 2 : 0); i <= std::min(lo + 2, m - 1); ++i) {
    const cplx e0 = poly.v[i], e1 = poly.v[(i + 1) % m];
    dmin = std::min(dmin, distance_point_segment(p, e0, e1));
  }
  dmin = std::min({dmin, distance_point_segment(p, poly.v[m - 1], poly.v[0]),
                   distance_point_segment(p, poly.v[0], poly.v[1])});
  return dmin <= tol ? Location::boundary : Location::inside;
}

double distance_to_convex_fast(cplx p, const Polygon& poly) {
  if (poly.kind != PolyKind::polygon) return distance_to_polygon(p, poly);
  const std::size_t m = poly.v.size();
  const cplx o = poly.v[0];
  // Locate the fan triangle (o, v[lo], v[lo+1]) containing the direction of p.
  const double c_first = cross(poly.v[1] - o, p - o);
  const double c_last = cross(poly.v[m - 1] - o, p - o);
  std::size_t lo = 1, hi = m - 1;
  if (c_first < 0.0 || c_last > 0.0) {
    // outside the angular span at the apex: nearest point is near vertex 0
    double best = std::numeric_limits<double>::infinity();
    best = std::min(best, distance_point_segment(p, poly.v[m - 1], o));
    best = std::min(best, distance_point_segment(p, o, poly.v[1]));
    return best;
  }
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (cross(poly.v[mid] - o, p - o) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const cplx e0 = poly.v[lo], e1 = poly.v[lo + 1 == m ? 0 : lo + 1];
  if (cross(e1 - e0, p - e0) >= 0.0) return 0.0;  // inside
  double best = distance_point_segment(p, e0, e1);
  if (lo >= 2) best = std::min(best, distance_point_segment(p, poly.v[lo - 1], e0));
  if (lo + 2 <= m - 1)
    best = std::min(best, distance_point_segment(p, e1, poly.v[lo + 2]));
  return best;
}

}  // namespace nrange::planegeom
