// Slow reference implementations used to cross-check the library. Everything
// here favors the most literal formulation available over speed and shares as
// little code with the library as possible: hulls are gift-wrapped instead of
// chained, containment is tested pair-by-pair, transversals are found by
// brute force over vertex pairs.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bodyorder/body.hpp"
#include "bodyorder/geometry.hpp"

namespace oracle {

using bodyorder::ConvexBody;
using bodyorder::Family;
using bodyorder::orient3;
using bodyorder::Point;
using bodyorder::Scalar;

inline Scalar dist2(const Point& a, const Point& b) {
  Scalar dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline std::vector<Point> dedupe(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Gift-wrapped hull, counterclockwise, corners only. Collinear input
/// collapses to its two extreme points, singletons to themselves.
inline std::vector<Point> giftwrap(std::vector<Point> pts) {
  pts = dedupe(pts);
  if (pts.size() <= 2) return pts;
  Point start = pts[0];
  for (const Point& p : pts)
    if (p < start) start = p;
  std::vector<Point> hull;
  Point cur = start;
  do {
    hull.push_back(cur);
    Point next = cur;
    for (const Point& p : pts) {
      if (p == cur) continue;
      if (next == cur) {
        next = p;
        continue;
      }
      int s = orient3(cur, next, p);
      if (s < 0 || (s == 0 && dist2(cur, p) > dist2(cur, next))) next = p;
    }
    cur = next;
    if (hull.size() > pts.size())
      throw std::logic_error("giftwrap: walk failed to close");
  } while (!(cur == start));
  if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
  return hull;
}

/// Containment in the hull of a point set, decided without building the hull:
/// p lies in conv(pts) iff for every directed pair (a, b) whose right side is
/// empty of sample points, p is not on that right side either.
inline bool contains_in_hull(const std::vector<Point>& pts, const Point& p) {
  std::vector<Point> u = dedupe(pts);
  if (u.empty()) return false;
  if (u.size() == 1) return p == u[0];
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < u.size(); ++j) {
      if (i == j) continue;
      bool edge = true;
      for (size_t k = 0; k < u.size() && edge; ++k)
        if (orient3(u[i], u[j], u[k]) < 0) edge = false;
      if (edge && orient3(u[i], u[j], p) < 0) return false;
    }
  // Collinear sets have no empty-side pair in only one degenerate case:
  // everything on a line. Then membership means lying between the extremes.
  bool all_collinear = true;
  for (size_t k = 2; k < u.size() && all_collinear; ++k)
    all_collinear = orient3(u[0], u[1], u[k]) == 0;
  if (all_collinear) {
    if (orient3(u[0], u[1], p) != 0 && u.size() >= 2) return false;
    Point lo = u.front(), hi = u.front();
    for (const Point& q : u) {
      if (q < lo) lo = q;
      if (hi < q) hi = q;
    }
    return !(p < lo) && !(hi < p);
  }
  return true;
}

inline std::vector<Point> body_points(const ConvexBody& b, int subdivisions) {
  std::vector<Point> out = b.vertices;
  size_t n = b.vertices.size();
  if (n >= 2) {
    for (size_t i = 0; i < n; ++i) {
      const Point& p = b.vertices[i];
      const Point& q = b.vertices[(i + 1) % n];
      if (n == 2 && i == 1) break;
      for (int j = 1; j <= subdivisions; ++j) {
        Scalar t = Scalar::ratio(j, subdivisions + 1);
        out.push_back({p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t});
      }
    }
  }
  return out;
}

/// Boundary word of a small family, from scratch: sample every body, wrap the
/// samples, attribute each hull corner to its owner, collapse cyclic runs.
/// Throws when a corner belongs to two bodies (contact configuration).
inline std::vector<int> sampled_word(const Family& f, int subdivisions) {
  std::vector<Point> all;
  std::map<Point, int> owner;
  for (size_t i = 0; i < f.size(); ++i)
    for (const Point& p : body_points(f[i], subdivisions)) {
      auto [it, fresh] = owner.insert({p, static_cast<int>(i)});
      if (!fresh && it->second != static_cast<int>(i))
        throw std::runtime_error("sampled_word: shared boundary point");
      all.push_back(p);
    }
  std::vector<Point> hull = giftwrap(all);
  std::vector<int> labels;
  for (const Point& p : hull) labels.push_back(owner.at(p));
  // cyclic run collapse
  std::vector<int> word;
  for (int l : labels)
    if (word.empty() || word.back() != l) word.push_back(l);
  while (word.size() > 1 && word.front() == word.back()) word.pop_back();
  return word;
}

/// Does the cyclic word contain the pattern as a subsequence? Checked the
/// dumb way: try every rotation, scan one period.
inline bool cyclic_contains(const std::vector<int>& word,
                            const std::vector<int>& pattern) {
  size_t n = word.size();
  if (n == 0) return pattern.empty();
  for (size_t r = 0; r < n; ++r) {
    size_t at = 0;
    for (size_t i = 0; i < n && at < pattern.size(); ++i)
      if (word[(r + i) % n] == pattern[at]) ++at;
    if (at == pattern.size()) return true;
  }
  return false;
}

struct SampledOrientations {
  bool ccw = false;
  bool cw = false;
};

inline SampledOrientations sampled_orientations(const ConvexBody& a,
                                                const ConvexBody& b,
                                                const ConvexBody& c,
                                                int subdivisions = 3) {
  std::vector<int> w = sampled_word({a, b, c}, subdivisions);
  return {cyclic_contains(w, {0, 1, 2}), cyclic_contains(w, {0, 2, 1})};
}

inline bool line_through_meets(const Point& v, const Point& w,
                               const ConvexBody& b) {
  bool nonneg = false, nonpos = false;
  for (const Point& p : b.vertices) {
    int s = orient3(v, w, p);
    if (s >= 0) nonneg = true;
    if (s <= 0) nonpos = true;
  }
  return nonneg && nonpos;
}

inline std::vector<Point> all_vertices(const Family& f) {
  std::vector<Point> pts;
  for (const ConvexBody& b : f) pts.insert(pts.end(), b.vertices.begin(), b.vertices.end());
  return dedupe(pts);
}

/// Largest number of members one line can meet. A line of maximum coverage
/// can always be nudged until it passes through two distinct family vertices,
/// so trying exactly those lines is exhaustive.
inline int max_line_coverage(const Family& f) {
  std::vector<Point> pts = all_vertices(f);
  if (pts.size() < 2) return f.empty() ? 0 : static_cast<int>(f.size());
  int best = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      int met = 0;
      for (const ConvexBody& b : f)
        if (line_through_meets(pts[i], pts[j], b)) ++met;
      best = std::max(best, met);
    }
  return best;
}

inline bool transversal_exists(const Family& f) {
  return max_line_coverage(f) == static_cast<int>(f.size());
}

/// Literal convex-position test: drop each member in turn and compare
/// gift-wrapped hulls as corner sets.
inline bool in_convex_position(const Family& f) {
  if (f.size() < 2) return true;
  std::vector<Point> whole;
  for (const ConvexBody& b : f)
    whole.insert(whole.end(), b.vertices.begin(), b.vertices.end());
  std::vector<Point> hull_all = giftwrap(whole);
  std::set<Point> corners(hull_all.begin(), hull_all.end());
  for (size_t skip = 0; skip < f.size(); ++skip) {
    std::vector<Point> rest;
    for (size_t i = 0; i < f.size(); ++i)
      if (i != skip)
        rest.insert(rest.end(), f[i].vertices.begin(), f[i].vertices.end());
    std::vector<Point> hull_rest = giftwrap(rest);
    std::set<Point> rest_corners(hull_rest.begin(), hull_rest.end());
    if (rest_corners == corners) return false;
  }
  return true;
}

}  // namespace oracle
