#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bodyorder/body.hpp"
#include "bodyorder/errors.hpp"
#include "bodyorder/geometry.hpp"

namespace bodyorder {

/// Strict convex hull in counterclockwise order. Collinear and duplicate
/// points are dropped; collinear input collapses to its two extremes, so the
/// result can have one or two vertices.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

/// Wraps a hull vertex list as a body so the containment and clipping
/// helpers apply. The list must already be a valid hull.
inline ConvexBody body_from_hull(std::vector<Point> hull_vertices,
                                 std::string id = "hull") {
  return ConvexBody{std::move(id), std::move(hull_vertices)};
}

/// Cyclic boundary edges of a body: n edges for a polygon, the two
/// directed traversals for a segment, none for a point.
inline std::vector<std::pair<Point, Point>> boundary_edges(
    const ConvexBody& b) {
  const auto& v = b.vertices;
  std::vector<std::pair<Point, Point>> e;
  if (v.size() == 2) {
    e.push_back({v[0], v[1]});
    e.push_back({v[1], v[0]});
  } else if (v.size() >= 3) {
    for (size_t i = 0; i < v.size(); ++i)
      e.push_back({v[i], v[(i + 1) % v.size()]});
  }
  return e;
}

/// Number of connected components of bd(a) intersected with b, where bd(a)
/// is the cyclic boundary walk of a. full_boundary marks bd(a) contained in
/// b entirely (equivalently a inside b), in which case count is 1.
struct ArcComponents {
  int count = 0;
  bool full_boundary = false;
};

inline ArcComponents boundary_arc_components(const ConvexBody& a,
                                             const ConvexBody& b) {
  if (a.vertices.size() == 1) {
    if (body_contains(b, a.vertices[0])) return {1, true};
    return {0, false};
  }
  auto edges = boundary_edges(a);
  const size_t n = edges.size();
  std::vector<std::optional<std::pair<Scalar, Scalar>>> iv(n);
  bool all_full = true;
  bool any = false;
  for (size_t i = 0; i < n; ++i) {
    iv[i] = clip_segment_params(b, edges[i].first, edges[i].second);
    if (iv[i]) any = true;
    if (!iv[i] || iv[i]->first != Scalar(0) || iv[i]->second != Scalar(1))
      all_full = false;
  }
  if (all_full) return {1, true};
  if (!any) return {0, false};
  // Merge intervals that meet at shared edge endpoints, cyclically.
  std::vector<int> comp(n, -1);
  int count = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!iv[i]) continue;
    size_t prev = (i + n - 1) % n;
    bool joins_prev = i > 0 && iv[prev] && comp[prev] >= 0 &&
                      iv[prev]->second == Scalar(1) &&
                      iv[i]->first == Scalar(0);
    comp[i] = joins_prev ? comp[prev] : count++;
  }
  // Wrap-around join between the last and first populated edges.
  if (iv[0] && iv[n - 1] && comp[0] != comp[n - 1] &&
      iv[n - 1]->second == Scalar(1) && iv[0]->first == Scalar(0)) {
    --count;
  }
  return {count, false};
}

/// Maximal run of consecutive hull vertices coming from one body.
struct HullArc {
  int body = -1;                // index into the input family
  std::vector<int> vertices;    // indices into hull.vertices, ccw order
};

/// Joint convex hull of a family with each hull vertex attributed to the
/// unique body it belongs to, the maximal single-body arcs in
/// counterclockwise order, and the cyclic boundary word they spell.
struct LabeledHull {
  ConvexBody hull;
  std::vector<HullArc> arcs;
  std::vector<int> word;        // body index per arc, cyclically reduced

  bool on_word(int body) const {
    for (int w : word)
      if (w == body) return true;
    return false;
  }
};

/// Builds the labeled hull. Throws tangency_error when a boundary point of
/// the joint hull lies in two bodies or a third body touches a hull edge
/// between its two owners: attribution is ill-defined under such contacts.
inline LabeledHull hull_of_bodies(std::span<const ConvexBody> bodies) {
  if (bodies.empty())
    throw std::invalid_argument("hull_of_bodies: empty family");
  std::map<Point, std::vector<int>> owners;
  std::vector<Point> all;
  for (size_t i = 0; i < bodies.size(); ++i) {
    if (bodies[i].vertices.empty())
      throw std::invalid_argument("hull_of_bodies: body without vertices");
    for (const Point& p : bodies[i].vertices) {
      auto& o = owners[p];
      if (o.empty() || o.back() != static_cast<int>(i))
        o.push_back(static_cast<int>(i));
      all.push_back(p);
    }
  }

  LabeledHull out;
  out.hull = body_from_hull(convex_hull(std::move(all)));
  const auto& hv = out.hull.vertices;
  const size_t m = hv.size();

  std::vector<int> owner(m, -1);
  for (size_t i = 0; i < m; ++i) {
    const auto& o = owners.at(hv[i]);
    if (o.size() != 1)
      throw tangency_error("hull vertex " + hv[i].str() +
                           " belongs to bodies '" + bodies[o[0]].id +
                           "' and '" + bodies[o[1]].id + "'");
    owner[i] = o[0];
  }

  // Validate every boundary edge: each body may only touch it as the owner
  // of an endpoint, and the two owners' contact pieces must stay apart.
  auto edge_check = [&](const Point& u, const Point& v, int ou, int ov) {
    Scalar pre_end(0), suf_start(1);
    for (size_t k = 0; k < bodies.size(); ++k) {
      auto iv = clip_segment_params(bodies[k], u, v);
      if (!iv) continue;
      int ki = static_cast<int>(k);
      if (ou == ov) {
        if (ki != ou)
          throw tangency_error("body '" + bodies[k].id +
                               "' touches the hull boundary inside the arc "
                               "of body '" + bodies[ou].id + "'");
        continue;
      }
      if (ki == ou) {
        pre_end = iv->second;        // starts at u since u is a vertex of k
      } else if (ki == ov) {
        suf_start = iv->first;       // ends at v likewise
      } else {
        throw tangency_error("body '" + bodies[k].id +
                             "' touches the hull edge between bodies '" +
                             bodies[ou].id + "' and '" + bodies[ov].id + "'");
      }
    }
    if (ou != ov && pre_end >= suf_start)
      throw tangency_error("bodies '" + bodies[ou].id + "' and '" +
                           bodies[ov].id +
                           "' meet on a common hull edge");
  };

  if (m == 2) {
    edge_check(hv[0], hv[1], owner[0], owner[1]);
  } else if (m >= 3) {
    for (size_t i = 0; i < m; ++i) {
      size_t j = (i + 1) % m;
      edge_check(hv[i], hv[j], owner[i], owner[j]);
    }
  }

  // Group consecutive hull vertices by owner, merging across the wrap.
  if (m > 0) {
    size_t start = 0;
    if (m > 1 && owner[0] == owner[m - 1]) {
      // Begin at the first owner change so runs never straddle the seam.
      while (start < m && owner[start] == owner[0]) ++start;
      if (start == m) start = 0;  // single body on the hull
    }
    HullArc cur;
    for (size_t s = 0; s < m; ++s) {
      size_t i = (start + s) % m;
      if (cur.body != owner[i]) {
        if (cur.body >= 0) out.arcs.push_back(std::move(cur));
        cur = HullArc{owner[i], {}};
      }
      cur.vertices.push_back(static_cast<int>(i));
    }
    out.arcs.push_back(std::move(cur));
  }
  out.word.reserve(out.arcs.size());
  for (const HullArc& a : out.arcs) out.word.push_back(a.body);
  return out;
}

/// True when `pattern` occurs as a subsequence of the cyclic word, i.e.
/// inside some window of one full period.
inline bool cyclic_subsequence(const std::vector<int>& word,
                               const std::vector<int>& pattern) {
  if (pattern.empty()) return true;
  const size_t n = word.size();
  if (n == 0) return false;
  for (size_t s = 0; s < n; ++s) {
    if (word[s] != pattern[0]) continue;
    size_t pi = 1;
    for (size_t off = 1; off < n && pi < pattern.size(); ++off) {
      if (word[(s + off) % n] == pattern[pi]) ++pi;
    }
    if (pi == pattern.size()) return true;
  }
  return false;
}

namespace detail {

inline std::vector<Point> family_points(std::span<const ConvexBody> bodies,
                                        int skip = -1) {
  std::vector<Point> pts;
  for (size_t i = 0; i < bodies.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    pts.insert(pts.end(), bodies[i].vertices.begin(),
               bodies[i].vertices.end());
  }
  return pts;
}

inline bool hull_contains(const std::vector<Point>& hull, const Point& p) {
  if (hull.empty()) return false;
  return body_contains(body_from_hull(hull), p);
}

/// Whether dropping one member leaves the joint hull unchanged, decided by
/// mutual vertex containment of the two hulls.
inline bool hull_unchanged_without(std::span<const ConvexBody> bodies,
                                   int skip) {
  std::vector<Point> whole = convex_hull(family_points(bodies));
  std::vector<Point> rest = convex_hull(family_points(bodies, skip));
  if (rest.empty()) return whole.empty();
  for (const Point& p : whole)
    if (!hull_contains(rest, p)) return false;
  for (const Point& p : rest)
    if (!hull_contains(whole, p)) return false;
  return true;
}

}  // namespace detail

}  // namespace bodyorder
