#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bodyorder/geometry.hpp"

namespace bodyorder {

/// Compact convex body given by its extreme points in counterclockwise
/// order. One vertex is a point, two are a segment, three or more form a
/// strictly convex polygon (no collinear vertex triples).
struct ConvexBody {
  std::string id;
  std::vector<Point> vertices;
};

using Family = std::vector<ConvexBody>;

/// Throws std::invalid_argument unless the vertex list satisfies the
/// ConvexBody contract.
inline void validate_body(const ConvexBody& b) {
  const auto& v = b.vertices;
  auto fail = [&b](const std::string& why) {
    throw std::invalid_argument("body '" + b.id + "': " + why);
  };
  if (v.empty()) fail("no vertices");
  if (v.size() == 1) return;
  if (v.size() == 2) {
    if (v[0] == v[1]) fail("segment endpoints coincide");
    return;
  }
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    int s = orient3(v[i], v[(i + 1) % n], v[(i + 2) % n]);
    if (s == 0) fail("collinear vertices " + std::to_string(i) + ".." +
                     std::to_string((i + 2) % n));
    if (s < 0) fail("vertices not in counterclockwise order");
  }
  // All strict left turns still allow a polygon winding several times
  // around; a simple convex cycle passes any fixed ray direction once.
  int descents = 0;
  std::vector<IVec> edges(n);
  for (size_t i = 0; i < n; ++i)
    edges[i] = ivec_between(v[i], v[(i + 1) % n]);
  for (size_t i = 0; i < n; ++i)
    if (!angular_less(edges[i], edges[(i + 1) % n])) ++descents;
  if (descents != 1) fail("vertex cycle winds more than once");
}

/// Closed halfplane a*x + b*y <= c.
struct Halfplane {
  Scalar a;
  Scalar b;
  Scalar c;

  Scalar eval(const Point& p) const { return a * p.x + b * p.y - c; }
};

/// Halfplane representation of the body. Polygons get one halfplane per
/// edge. Segments and points get the two side constraints plus end caps, so
/// the intersection is exactly the body for every vertex count.
inline std::vector<Halfplane> body_halfplanes(const ConvexBody& b) {
  const auto& v = b.vertices;
  std::vector<Halfplane> hs;
  auto outward = [](const Point& p, const Point& q) {
    // Outward normal of edge p->q of a counterclockwise polygon.
    Scalar nx = q.y - p.y;
    Scalar ny = p.x - q.x;
    return Halfplane{nx, ny, nx * p.x + ny * p.y};
  };
  if (v.size() >= 3) {
    hs.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i)
      hs.push_back(outward(v[i], v[(i + 1) % v.size()]));
    return hs;
  }
  if (v.size() == 2) {
    hs.push_back(outward(v[0], v[1]));
    hs.push_back(outward(v[1], v[0]));
    // End caps along the segment direction.
    Scalar dx = v[1].x - v[0].x;
    Scalar dy = v[1].y - v[0].y;
    hs.push_back({dx, dy, dx * v[1].x + dy * v[1].y});
    hs.push_back({-dx, -dy, -(dx * v[0].x) - dy * v[0].y});
    return hs;
  }
  if (v.size() == 1) {
    hs.push_back({Scalar(1), Scalar(0), v[0].x});
    hs.push_back({Scalar(-1), Scalar(0), -v[0].x});
    hs.push_back({Scalar(0), Scalar(1), v[0].y});
    hs.push_back({Scalar(0), Scalar(-1), -v[0].y});
    return hs;
  }
  throw std::invalid_argument("body '" + b.id + "': no vertices");
}

inline bool body_contains(const ConvexBody& b, const Point& p) {
  for (const Halfplane& h : body_halfplanes(b))
    if (h.eval(p).sign() > 0) return false;
  return true;
}

/// Strict interior membership; always false for points and segments.
inline bool body_interior_contains(const ConvexBody& b, const Point& p) {
  if (b.vertices.size() < 3) return false;
  for (const Halfplane& h : body_halfplanes(b))
    if (h.eval(p).sign() >= 0) return false;
  return true;
}

/// Parameter interval [t0, t1] of the part of segment p + t*(q - p),
/// t in [0, 1], lying inside the body; nullopt when empty.
inline std::optional<std::pair<Scalar, Scalar>> clip_segment_params(
    const ConvexBody& b, const Point& p, const Point& q) {
  Scalar lo(0), hi(1);
  Scalar dx = q.x - p.x;
  Scalar dy = q.y - p.y;
  for (const Halfplane& h : body_halfplanes(b)) {
    Scalar f0 = h.eval(p);
    Scalar df = h.a * dx + h.b * dy;
    // f(t) = f0 + t*df <= 0 required.
    if (df.is_zero()) {
      if (f0.sign() > 0) return std::nullopt;
      continue;
    }
    Scalar t = -f0 / df;
    if (df.sign() > 0) {
      if (t < hi) hi = t;
    } else {
      if (t > lo) lo = t;
    }
    if (lo > hi) return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

/// Range of the linear functional (dx, dy) . v over the body's points.
inline std::pair<Scalar, Scalar> projection_interval(const ConvexBody& b,
                                                     const Scalar& dx,
                                                     const Scalar& dy) {
  if (b.vertices.empty())
    throw std::invalid_argument("projection_interval: empty body");
  Scalar lo = dx * b.vertices[0].x + dy * b.vertices[0].y;
  Scalar hi = lo;
  for (size_t i = 1; i < b.vertices.size(); ++i) {
    Scalar v = dx * b.vertices[i].x + dy * b.vertices[i].y;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {lo, hi};
}

inline std::pair<Scalar, Scalar> projection_interval(const ConvexBody& b,
                                                     const Direction& d) {
  return projection_interval(b, Scalar(d.dx), Scalar(d.dy));
}

inline Scalar support_value(const ConvexBody& b, const IVec& dir) {
  return projection_interval(b, Scalar(dir.x), Scalar(dir.y)).second;
}

/// Clips a polygon (possibly already degenerate) against one halfplane,
/// keeping the closed region. Standard Sutherland-Hodgman step.
inline std::vector<Point> clip_polygon(const std::vector<Point>& poly,
                                       const Halfplane& h) {
  std::vector<Point> out;
  const size_t n = poly.size();
  if (n == 0) return out;
  for (size_t i = 0; i < n; ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % n];
    Scalar fc = h.eval(cur);
    Scalar fn = h.eval(nxt);
    bool cin = fc.sign() <= 0;
    bool nin = fn.sign() <= 0;
    if (cin) out.push_back(cur);
    if (cin != nin) {
      Scalar t = fc / (fc - fn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

inline std::vector<Point> intersect_regions(const ConvexBody& a,
                                            const ConvexBody& b) {
  std::vector<Point> poly = a.vertices;
  for (const Halfplane& h : body_halfplanes(b)) {
    poly = clip_polygon(poly, h);
    if (poly.empty()) break;
  }
  return poly;
}

/// Twice the signed area of a polygon given in order.
inline Scalar polygon_area2(std::span<const Point> poly) {
  Scalar s(0);
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

/// Whether the closed bodies share at least one point. Separating-axis test
/// over both halfplane normal sets; exact.
inline bool bodies_intersect(const ConvexBody& a, const ConvexBody& b) {
  auto separated_along = [&](const Scalar& nx, const Scalar& ny) {
    auto ia = projection_interval(a, nx, ny);
    auto ib = projection_interval(b, nx, ny);
    return ia.second < ib.first || ib.second < ia.first;
  };
  for (const Halfplane& h : body_halfplanes(a))
    if (separated_along(h.a, h.b)) return false;
  for (const Halfplane& h : body_halfplanes(b))
    if (separated_along(h.a, h.b)) return false;
  return true;
}

inline bool interiors_overlap(const ConvexBody& a, const ConvexBody& b) {
  if (a.vertices.size() < 3 || b.vertices.size() < 3) return false;
  std::vector<Point> common = intersect_regions(a, b);
  if (common.size() < 3) return false;
  return !polygon_area2(common).is_zero();
}

/// Touching contact: nonempty intersection with disjoint interiors. For a
/// point or segment member any contact counts as tangency.
inline bool is_tangent_pair(const ConvexBody& a, const ConvexBody& b) {
  return bodies_intersect(a, b) && !interiors_overlap(a, b);
}

inline Point vertex_centroid(const ConvexBody& b) {
  if (b.vertices.empty())
    throw std::invalid_argument("vertex_centroid: empty body");
  Scalar sx(0), sy(0);
  for (const Point& p : b.vertices) {
    sx += p.x;
    sy += p.y;
  }
  Scalar n(static_cast<long>(b.vertices.size()));
  return {sx / n, sy / n};
}

}  // namespace bodyorder
