#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bodyorder/errors.hpp"
#include "bodyorder/hull.hpp"
#include "bodyorder/predicates.hpp"

namespace bodyorder {

/// Whether every member contributes to the joint hull: dropping any one
/// body changes the hull. Decided literally by hull comparison.
inline bool in_convex_position_direct(const Family& f) {
  if (f.empty())
    throw std::invalid_argument("in_convex_position_direct: empty family");
  for (size_t i = 0; i < f.size(); ++i)
    if (detail::hull_unchanged_without(f, static_cast<int>(i))) return false;
  return true;
}

namespace detail {

/// Fast equivalent of the direct test for subsets of a fixed family: a
/// member is droppable exactly when it owns no hull vertex position alone,
/// since hulls are compared on vertex positions and a removed body only
/// leaves the hull unchanged if its hull positions are also someone else's.
class SubsetConvexPosition {
 public:
  explicit SubsetConvexPosition(const Family& f) : fam_(&f) {
    for (size_t i = 0; i < f.size(); ++i)
      for (const Point& p : f[i].vertices)
        owners_[p] |= 1u << i;
  }

  bool test(const std::vector<int>& subset) const {
    unsigned mask = 0;
    std::vector<Point> pts;
    for (int i : subset) {
      mask |= 1u << i;
      pts.insert(pts.end(), (*fam_)[i].vertices.begin(),
                 (*fam_)[i].vertices.end());
    }
    std::vector<Point> hull = convex_hull(std::move(pts));
    unsigned essential = 0;
    for (const Point& p : hull) {
      unsigned o = owners_.at(p) & mask;
      if ((o & (o - 1)) == 0) essential |= o;  // sole owner of this vertex
    }
    return essential == mask;
  }

 private:
  const Family* fam_;
  std::map<Point, unsigned> owners_;
};

}  // namespace detail

/// Order of first appearance of the members along the joint hull boundary,
/// starting from the first member's first arc; counterclockwise when ccw is
/// true, clockwise otherwise. Errors when some member has no arc.
inline std::vector<int> canonical_order(const Family& f, bool ccw = true) {
  LabeledHull h = hull_of_bodies(f);
  for (size_t i = 0; i < f.size(); ++i)
    if (!h.on_word(static_cast<int>(i)))
      throw geometry_error("canonical_order: body '" + f[i].id +
                           "' has no arc on the joint hull");
  const size_t m = h.arcs.size();
  size_t start = 0;
  while (start < m && h.arcs[start].body != 0) ++start;
  std::vector<int> order;
  std::vector<bool> seen(f.size(), false);
  for (size_t s = 0; s < m; ++s) {
    size_t i = ccw ? (start + s) % m : (start + m - s) % m;
    int b = h.arcs[i].body;
    if (!seen[b]) {
      seen[b] = true;
      order.push_back(b);
    }
  }
  return order;
}

/// Witness ordering under which every triple, read in that order, admits the
/// counterclockwise orientation.
struct ConvexPositionCertificate {
  std::vector<int> ordering;
};

namespace detail {

inline bool triples_all_ccw(TripleOrientationCache& cache,
                            const std::vector<int>& order) {
  const size_t n = order.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (!cache.get(order[i], order[j], order[k]).ccw) return false;
  return true;
}

}  // namespace detail

/// Searches for an ordering of the family whose triples all admit the
/// counterclockwise orientation. Tries the boundary order first, then falls
/// back to a pruned permutation search (family size capped at 10).
inline std::optional<ConvexPositionCertificate> exists_consistent_order(
    const Family& f) {
  const size_t n = f.size();
  if (n == 0)
    throw std::invalid_argument("exists_consistent_order: empty family");
  if (n <= 2) {
    std::vector<int> id(n);
    for (size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    return ConvexPositionCertificate{std::move(id)};
  }
  TripleOrientationCache cache(f);
  bool direct = in_convex_position_direct(f);
  if (direct) {
    std::vector<int> order = canonical_order(f, true);
    if (detail::triples_all_ccw(cache, order))
      return ConvexPositionCertificate{std::move(order)};
  }
  if (n > 10)
    throw size_limit_error(
        "exists_consistent_order: permutation search capped at 10 bodies");
  std::vector<int> prefix;
  std::vector<bool> used(n, false);
  prefix.reserve(n);
  auto dfs = [&](auto&& self) -> bool {
    if (prefix.size() == n) return true;
    for (size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (size_t i = 0; i + 1 < prefix.size() && ok; ++i)
        for (size_t j = i + 1; j < prefix.size() && ok; ++j)
          if (!cache.get(prefix[i], prefix[j], static_cast<int>(x)).ccw)
            ok = false;
      if (!ok) continue;
      prefix.push_back(static_cast<int>(x));
      used[x] = true;
      if (self(self)) return true;
      prefix.pop_back();
      used[x] = false;
    }
    return false;
  };
  if (dfs(dfs)) return ConvexPositionCertificate{std::move(prefix)};
  return std::nullopt;
}

/// Largest subfamily in convex position together with its boundary order.
struct SubfamilyResult {
  std::vector<int> members;
  ConvexPositionCertificate certificate;
};

/// Enumerates subsets by decreasing size; among maximum subfamilies returns
/// the lexicographically smallest member list. Family size capped at 15.
inline SubfamilyResult largest_convex_subfamily(const Family& f) {
  const size_t n = f.size();
  if (n == 0)
    throw std::invalid_argument("largest_convex_subfamily: empty family");
  if (n > 15)
    throw size_limit_error(
        "largest_convex_subfamily: subset enumeration capped at 15 bodies");
  detail::SubsetConvexPosition fast(f);
  std::vector<int> subset;
  for (size_t k = n; k >= 1; --k) {
    subset.assign(k, 0);
    // Lexicographically ordered k-subsets of {0, ..., n-1}.
    for (size_t i = 0; i < k; ++i) subset[i] = static_cast<int>(i);
    while (true) {
      if (fast.test(subset)) {
        Family sub;
        for (int i : subset) sub.push_back(f[i]);
        if (in_convex_position_direct(sub)) {
          std::vector<int> order = canonical_order(sub, true);
          std::vector<int> mapped;
          mapped.reserve(order.size());
          for (int o : order) mapped.push_back(subset[o]);
          return SubfamilyResult{subset,
                                 ConvexPositionCertificate{std::move(mapped)}};
        }
      }
      // Next k-subset.
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && subset[i] == static_cast<int>(n - k + i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  throw geometry_error("largest_convex_subfamily: unreachable");
}

/// Tangent line rotation around c0: members of `rest` ordered by the angle
/// at which a supporting line of c0, rotating counterclockwise from a
/// starting position where it touches none of them, first reaches each
/// member, together with those first-contact lines.
struct TangentRotationResult {
  std::vector<int> order;      // indices into rest
  std::vector<Line> tangents;  // first-contact line per ordered member
};

inline TangentRotationResult tangent_rotation_order(const ConvexBody& c0,
                                                    const Family& rest) {
  if (rest.empty())
    throw std::invalid_argument("tangent_rotation_order: no other bodies");
  Family all;
  all.reserve(rest.size() + 1);
  all.push_back(c0);
  for (const ConvexBody& b : rest) all.push_back(b);
  LabeledHull h = hull_of_bodies(all);
  if (!h.on_word(0))
    throw geometry_error(
        "tangent_rotation_order: center body has no arc on the joint hull");

  const auto& hv = h.hull.vertices;
  const size_t m = hv.size();
  auto edge_normal = [&](size_t i) {
    return reduce(-perp(ivec_between(hv[i], hv[(i + 1) % m])));
  };

  // Starting direction: an outward normal at c0's arc for which c0 is the
  // strict support maximum, so the initial tangent line avoids every other
  // member.
  std::vector<IVec> start_candidates;
  for (const HullArc& arc : h.arcs) {
    if (arc.body != 0) continue;
    for (size_t t = 0; t + 1 < arc.vertices.size(); ++t)
      start_candidates.push_back(edge_normal(arc.vertices[t]));
    if (m >= 2) {
      size_t first = arc.vertices.front();
      size_t last = arc.vertices.back();
      IVec sum = edge_normal((first + m - 1) % m) + edge_normal(first);
      if (!sum.is_zero()) start_candidates.push_back(reduce(sum));
      if (last != first) {
        sum = edge_normal((last + m - 1) % m) + edge_normal(last);
        if (!sum.is_zero()) start_candidates.push_back(reduce(sum));
      }
    }
  }
  if (m == 2) {
    // Collinear family: the hull degenerates to a segment and the edge
    // normals are supported by every body on the line. Try the two
    // along-segment directions as well.
    IVec d = ivec_between(hv[0], hv[1]);
    start_candidates.push_back(reduce(d));
    start_candidates.push_back(reduce(-d));
  }
  std::optional<IVec> u0;
  for (const IVec& cand : start_candidates) {
    Scalar s0 = support_value(c0, cand);
    bool strict = true;
    for (const ConvexBody& b : rest)
      if (support_value(b, cand) >= s0) {
        strict = false;
        break;
      }
    if (strict) {
      u0 = cand;
      break;
    }
  }
  if (!u0)
    throw geometry_error(
        "tangent_rotation_order: no starting tangent touches the center "
        "body alone");

  // First contact of the rotating support line with each member: the
  // smallest counterclockwise turn from u0 to a common outward support
  // direction of c0 and that member.
  struct Contact {
    int member;
    IVec dir;
  };
  std::vector<Contact> contacts;
  for (size_t r = 0; r < rest.size(); ++r) {
    const ConvexBody& b = rest[r];
    std::optional<IVec> first_dir;
    for (const Point& p : c0.vertices)
      for (const Point& q : b.vertices) {
        if (p == q) continue;
        IVec n = perp(ivec_between(p, q));
        for (IVec u : {n, -n}) {
          if (support_value(c0, u) != Scalar(u.x) * p.x + Scalar(u.y) * p.y)
            continue;
          if (support_value(b, u) != Scalar(u.x) * q.x + Scalar(u.y) * q.y)
            continue;
          u = reduce(u);
          if (!first_dir || angular_less_from(*u0, u, *first_dir))
            first_dir = u;
        }
      }
    if (!first_dir)
      throw geometry_error("tangent_rotation_order: no common tangent with '" +
                           b.id + "'");
    contacts.push_back({static_cast<int>(r), *first_dir});
  }
  std::sort(contacts.begin(), contacts.end(),
            [&](const Contact& a, const Contact& b) {
              if (a.dir == b.dir) return a.member < b.member;
              return angular_less_from(*u0, a.dir, b.dir);
            });
  for (size_t i = 0; i + 1 < contacts.size(); ++i)
    if (contacts[i].dir == contacts[i + 1].dir)
      throw tangency_error(
          "tangent_rotation_order: one tangent line first reaches bodies '" +
          rest[contacts[i].member].id + "' and '" +
          rest[contacts[i + 1].member].id + "' together");

  TangentRotationResult out;
  for (const Contact& c : contacts) {
    out.order.push_back(c.member);
    out.tangents.push_back(line_from_normal(c.dir, support_value(c0, c.dir)));
  }
  return out;
}

/// Checks the transitivity property of unique orientations along an ordered
/// family: whenever (i,j,k) and (j,k,l) share the same unique orientation,
/// (i,j,l) and (i,k,l) admit it too.
inline bool orientation_transitivity_check(const Family& ordered) {
  const size_t n = ordered.size();
  TripleOrientationCache cache(ordered);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        for (size_t l = k + 1; l < n; ++l) {
          OrientationSet s1 = cache.get(static_cast<int>(i),
                                        static_cast<int>(j),
                                        static_cast<int>(k));
          OrientationSet s2 = cache.get(static_cast<int>(j),
                                        static_cast<int>(k),
                                        static_cast<int>(l));
          if (!s1.unique() || !s2.unique() || !(s1 == s2)) continue;
          OrientationSet t1 = cache.get(static_cast<int>(i),
                                        static_cast<int>(j),
                                        static_cast<int>(l));
          OrientationSet t2 = cache.get(static_cast<int>(i),
                                        static_cast<int>(k),
                                        static_cast<int>(l));
          bool want_ccw = s1.ccw;
          if (want_ccw && !(t1.ccw && t2.ccw)) return false;
          if (!want_ccw && !(t1.cw && t2.cw)) return false;
        }
  return true;
}

/// Either a line meeting at least t members or a subfamily of at least n
/// bodies in convex position.
struct DichotomyOutcome {
  std::optional<TransversalCertificate> transversal;
  std::optional<SubfamilyResult> convex;
};

inline std::optional<DichotomyOutcome> dichotomy(const Family& f, int t,
                                                 int n) {
  if (t < 1 || n < 1)
    throw std::invalid_argument("dichotomy: thresholds must be positive");
  TransversalCertificate bt = best_transversal(f);
  if (static_cast<int>(bt.members.size()) >= t) {
    DichotomyOutcome out;
    out.transversal = std::move(bt);
    return out;
  }
  SubfamilyResult sub = largest_convex_subfamily(f);
  if (static_cast<int>(sub.members.size()) >= n) {
    DichotomyOutcome out;
    out.convex = std::move(sub);
    return out;
  }
  return std::nullopt;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Classical size threshold: every family of at least this many pairwise
/// disjoint noncrossing bodies in general position contains n members in
/// convex position.
inline mpz_class bound_pach_toth(int n) {
  if (n < 3) throw std::invalid_argument("bound_pach_toth: n >= 3 required");
  mpz_class b = binomial(2 * n - 4, n - 2);
  return b * b + 1;
}

/// Sharper threshold with the same guarantee.
inline mpz_class bound_M(int n) {
  if (n < 3) throw std::invalid_argument("bound_M: n >= 3 required");
  return (binomial(2 * n - 5, n - 2) + 1) * binomial(2 * n - 4, n - 2) + 1;
}

/// Vertex count forcing a monotone clique in two-colored ordered triple
/// systems with the transitivity property.
inline mpz_class bound_ordered_ramsey(int k, int l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("bound_ordered_ramsey: k, l >= 1 required");
  return binomial(k + l + 4, l + 2) + 1;
}

}  // namespace bodyorder
