#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bodyorder/convex_position.hpp"
#include "bodyorder/errors.hpp"
#include "bodyorder/predicates.hpp"
#include "bodyorder/rng.hpp"

namespace bodyorder {

/// Alternating sign map on ordered triples of ground elements, stored on
/// sorted index triples and extended to permutations by parity.
class Chirotope {
 public:
  Chirotope() = default;
  Chirotope(std::vector<std::string> ground,
            std::map<std::array<int, 3>, int> sorted_signs)
      : ground_(std::move(ground)), signs_(std::move(sorted_signs)) {}

  int size() const { return static_cast<int>(ground_.size()); }
  const std::vector<std::string>& ground() const { return ground_; }

  /// Sign of the ordered triple; 0 whenever an index repeats.
  int sign(int i, int j, int k) const {
    if (i == j || j == k || i == k) return 0;
    std::array<int, 3> s{i, j, k};
    int par = 1;
    if (s[0] > s[1]) {
      std::swap(s[0], s[1]);
      par = -par;
    }
    if (s[1] > s[2]) {
      std::swap(s[1], s[2]);
      par = -par;
    }
    if (s[0] > s[1]) {
      std::swap(s[0], s[1]);
      par = -par;
    }
    return par * signs_.at(s);
  }

  const std::map<std::array<int, 3>, int>& sorted_signs() const {
    return signs_;
  }

 private:
  std::vector<std::string> ground_;
  std::map<std::array<int, 3>, int> signs_;
};

/// Whether no triple of the family admits both boundary orders, so every
/// triple on the joint hull reads one way only.
inline bool is_3_nondisconnectable(const Family& f) {
  TripleOrientationCache cache(f);
  const int n = static_cast<int>(f.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (cache.get(i, j, k).both()) return false;
  return true;
}

/// The orientation map of the family as a chirotope. Errors when a triple
/// has both orientations or none: such families have no single sign per
/// triple.
inline Chirotope chirotope(const Family& f) {
  if (f.size() < 3)
    throw std::invalid_argument("chirotope: need at least 3 bodies");
  TripleOrientationCache cache(f);
  const int n = static_cast<int>(f.size());
  std::map<std::array<int, 3>, int> signs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        OrientationSet s = cache.get(i, j, k);
        if (s.both())
          throw geometry_error("chirotope: triple ('" + f[i].id + "', '" +
                               f[j].id + "', '" + f[k].id +
                               "') admits both orders");
        if (s.empty())
          throw geometry_error("chirotope: triple ('" + f[i].id + "', '" +
                               f[j].id + "', '" + f[k].id +
                               "') admits no order");
        signs[{i, j, k}] = s.ccw ? 1 : -1;
      }
  std::vector<std::string> ground;
  ground.reserve(f.size());
  for (const ConvexBody& b : f) ground.push_back(b.id);
  return Chirotope(std::move(ground), std::move(signs));
}

/// Three-term exchange condition on every 5-element subpattern: for
/// distinct a, b and x, y, z the signs of chi(a,b,x)*chi(a,y,z),
/// -chi(a,b,y)*chi(a,x,z) and chi(a,b,z)*chi(a,x,y) never all coincide.
inline bool gp3_check(const Chirotope& chi) {
  const int n = chi.size();
  std::vector<int> others;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      others.clear();
      for (int v = 0; v < n; ++v)
        if (v != a && v != b) others.push_back(v);
      const int m = static_cast<int>(others.size());
      for (int xi = 0; xi < m; ++xi)
        for (int yi = xi + 1; yi < m; ++yi)
          for (int zi = yi + 1; zi < m; ++zi) {
            int x = others[xi], y = others[yi], z = others[zi];
            int t1 = chi.sign(a, b, x) * chi.sign(a, y, z);
            int t2 = -chi.sign(a, b, y) * chi.sign(a, x, z);
            int t3 = chi.sign(a, b, z) * chi.sign(a, x, y);
            if (t1 == t2 && t2 == t3) return false;
          }
    }
  return true;
}

/// Point assignment realizing a family's orientation map: points[i] stands
/// for the body mapped to it by body_to_point.
struct RepresentationCertificate {
  std::vector<Point> points;
  std::vector<int> body_to_point;  // body index -> point index
};

/// Whether the point set, under the given bijection, realizes the family's
/// orientations: every positively oriented point triple pulls back to a body
/// triple admitting the counterclockwise order. Errors on collinear point
/// triples, which orient no way at all.
inline bool verify_representation(const Family& f,
                                  const std::vector<Point>& points,
                                  const std::vector<int>& body_to_point) {
  const int n = static_cast<int>(f.size());
  if (static_cast<int>(points.size()) != n ||
      static_cast<int>(body_to_point.size()) != n)
    throw std::invalid_argument(
        "verify_representation: sizes of family, points and map must agree");
  std::vector<bool> hit(n, false);
  for (int i : body_to_point) {
    if (i < 0 || i >= n || hit[i])
      throw std::invalid_argument(
          "verify_representation: map is not a bijection");
    hit[i] = true;
  }
  TripleOrientationCache cache(f);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int s = orient3(points[body_to_point[i]], points[body_to_point[j]],
                        points[body_to_point[k]]);
        if (s == 0)
          throw std::invalid_argument(
              "verify_representation: collinear image points for ('" +
              f[i].id + "', '" + f[j].id + "', '" + f[k].id + "')");
        OrientationSet os = cache.get(i, j, k);
        if (s > 0 && !os.ccw) return false;
        if (s < 0 && !os.cw) return false;
      }
  return true;
}

struct RepresentationSearchResult {
  std::optional<RepresentationCertificate> certificate;
  /// True when the exhaustive grid stage ran to completion, so a miss means
  /// no grid assignment exists.
  bool grid_exhausted = false;
  long nodes_used = 0;
};

namespace detail {

/// Orientation constraints as signs: +1 ccw only, -1 cw only, 0 free.
inline std::map<std::array<int, 3>, int> triple_constraints(const Family& f) {
  TripleOrientationCache cache(f);
  const int n = static_cast<int>(f.size());
  std::map<std::array<int, 3>, int> want;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        OrientationSet s = cache.get(i, j, k);
        if (s.empty())
          throw geometry_error("search_representation: triple ('" + f[i].id +
                               "', '" + f[j].id + "', '" + f[k].id +
                               "') admits no order");
        want[{i, j, k}] = s.both() ? 0 : (s.ccw ? 1 : -1);
      }
  return want;
}

inline bool points_satisfy(const std::map<std::array<int, 3>, int>& want,
                           const std::vector<Point>& pts) {
  for (const auto& [key, w] : want) {
    int s = orient3(pts[key[0]], pts[key[1]], pts[key[2]]);
    if (s == 0) return false;
    if (w != 0 && s != w) return false;
  }
  return true;
}

}  // namespace detail

/// Searches for a representing point set: first the bodies' vertex
/// centroids, then seeded random perturbations of them, then (for families
/// of at most 5 bodies) an exhaustive search over the 9x9 integer grid
/// [0,8]^2 with the first point confined to the lower-left quadrant, which
/// rotation symmetry allows. The node budget bounds grid search steps;
/// every certificate returned has been passed through verify_representation.
inline RepresentationSearchResult search_representation(
    const Family& f, long node_budget = 2000000, unsigned long seed = 1) {
  const int n = static_cast<int>(f.size());
  if (n < 3)
    throw std::invalid_argument("search_representation: need >= 3 bodies");
  RepresentationSearchResult out;
  auto want = detail::triple_constraints(f);

  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  auto accept = [&](const std::vector<Point>& pts) {
    if (!detail::points_satisfy(want, pts)) return false;
    if (!verify_representation(f, pts, identity))
      throw geometry_error("search_representation: certificate recheck failed");
    out.certificate = RepresentationCertificate{pts, identity};
    return true;
  };

  std::vector<Point> centroids;
  centroids.reserve(n);
  for (const ConvexBody& b : f) centroids.push_back(vertex_centroid(b));
  if (accept(centroids)) return out;

  // Seeded perturbation rounds around the centroids; jitter up to an eighth
  // of the family's bounding-box extent, on a fine rational grid.
  SplitMix64 rng(seed);
  Scalar minx = centroids[0].x, maxx = minx;
  Scalar miny = centroids[0].y, maxy = miny;
  for (const Point& p : centroids) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  Scalar extent = std::max(maxx - minx, maxy - miny);
  if (extent.is_zero()) extent = Scalar(1);
  for (int round = 0; round < 48; ++round) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (const Point& c : centroids) {
      long jx = rng.range(-64, 64);
      long jy = rng.range(-64, 64);
      pts.push_back({c.x + extent * Scalar::ratio(jx, 512),
                     c.y + extent * Scalar::ratio(jy, 512)});
    }
    if (accept(pts)) return out;
  }

  if (n > 5) return out;

  // Exhaustive grid stage with chronological backtracking; candidate cells
  // are checked against every constraint whose three bodies are placed.
  long nodes = 0;
  std::vector<Point> pts;
  pts.reserve(n);
  auto cell_ok = [&](int idx, const Point& cand) {
    for (int j = 0; j < idx; ++j)
      if (pts[j] == cand) return false;
    for (int a = 0; a < idx; ++a)
      for (int b = a + 1; b < idx; ++b) {
        int s = orient3(pts[a], pts[b], cand);
        if (s == 0) return false;
        int w = want.at({a, b, idx});
        if (w != 0 && s != w) return false;
      }
    return true;
  };
  auto dfs = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    const int xmax = idx == 0 ? 4 : 8;
    const int ymax = idx == 0 ? 4 : 8;
    for (int x = 0; x <= xmax; ++x)
      for (int y = 0; y <= ymax; ++y) {
        if (++nodes > node_budget) return false;
        Point cand{Scalar(x), Scalar(y)};
        if (!cell_ok(idx, cand)) continue;
        pts.push_back(cand);
        if (self(self, idx + 1)) return true;
        pts.pop_back();
      }
    return false;
  };
  bool found = dfs(dfs, 0);
  out.nodes_used = nodes;
  if (found) {
    if (!accept(pts))
      throw geometry_error("search_representation: grid hit fails recheck");
    return out;
  }
  out.grid_exhausted = nodes <= node_budget;
  return out;
}

}  // namespace bodyorder
