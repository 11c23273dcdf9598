#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bodyorder/body.hpp"
#include "bodyorder/convex_position.hpp"
#include "bodyorder/errors.hpp"
#include "bodyorder/hull.hpp"
#include "bodyorder/predicates.hpp"
#include "bodyorder/rng.hpp"

namespace bodyorder {

enum class FamilyKind {
  disjoint_on_circle,
  disjoint_random,
  noncrossing_nested,
  stabbed_by_line,
  case2_tangent_rotation,
};

inline const char* kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::disjoint_on_circle: return "disjoint-on-circle";
    case FamilyKind::disjoint_random: return "disjoint-random";
    case FamilyKind::noncrossing_nested: return "noncrossing-nested";
    case FamilyKind::stabbed_by_line: return "stabbed-by-line";
    case FamilyKind::case2_tangent_rotation: return "case2-tangent-rotation";
  }
  return "?";
}

inline std::optional<FamilyKind> kind_from_name(const std::string& s) {
  for (FamilyKind k :
       {FamilyKind::disjoint_on_circle, FamilyKind::disjoint_random,
        FamilyKind::noncrossing_nested, FamilyKind::stabbed_by_line,
        FamilyKind::case2_tangent_rotation})
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

/// Request for a generated family. Coordinates always land on the 1/64
/// lattice relative to rational anchor points, so output is exact and
/// platform independent.
struct GenSpec {
  FamilyKind kind = FamilyKind::disjoint_on_circle;
  int count = 5;
  std::uint64_t seed = 1;
  int vertices = 4;  // sample points per body; hulls may have fewer
};

namespace famgen_detail {

constexpr long kDen = 64;  // lattice denominator

inline Scalar units(long n) { return Scalar::ratio(n, kDen); }

inline Point lattice_point(long x, long y) { return {units(x), units(y)}; }

/// Random convex body around a rational center: the hull of `forced` plus
/// randomly sampled lattice offsets within [-rx, rx] x [-ry, ry] lattice
/// units.
inline std::optional<ConvexBody> body_around_box(
    SplitMix64& rng, const Point& center, long rx, long ry, int k,
    const std::vector<std::pair<long, long>>& forced = {}) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Point> pts;
    for (auto [ox, oy] : forced)
      pts.push_back({center.x + units(ox), center.y + units(oy)});
    for (int i = static_cast<int>(forced.size()); i < k; ++i)
      pts.push_back({center.x + units(rng.range(-rx, rx)),
                     center.y + units(rng.range(-ry, ry))});
    std::vector<Point> hull = convex_hull(std::move(pts));
    if (hull.size() >= 3) return ConvexBody{"", std::move(hull)};
  }
  return std::nullopt;
}

inline std::optional<ConvexBody> body_around(
    SplitMix64& rng, const Point& center, long r, int k,
    const std::vector<std::pair<long, long>>& forced = {}) {
  return body_around_box(rng, center, r, r, k, forced);
}

/// Exact point on the circle of radius `radius` at the angle encoded by the
/// rational half-angle tangent t.
inline Point circle_point(const Scalar& radius, const Scalar& t) {
  Scalar one(1);
  Scalar denom = one + t * t;
  return {radius * (one - t * t) / denom, radius * (Scalar(2) * t) / denom};
}

/// Half-angle tangent covering the full circle as u runs over [0, 1): four
/// slope-linear pieces, one per quarter of the half-angle range [0, pi).
inline Scalar half_angle_tangent(const Scalar& u) {
  Scalar w = Scalar(4) * u;
  long piece = 0;
  Scalar g = w;
  while (g >= Scalar(1) && piece < 3) {
    g -= Scalar(1);
    ++piece;
  }
  switch (piece) {
    case 0: return g;
    case 1: return Scalar(1) / (Scalar(1) - g);
    case 2:
      if (g.is_zero()) g = Scalar::ratio(1, 8);
      return -(Scalar(1) / g);
    default: return g - Scalar(1);
  }
}

inline void assign_ids(Family& f) {
  for (size_t i = 0; i < f.size(); ++i) f[i].id = std::to_string(i + 1);
}

inline bool pairwise_disjoint(const Family& f) {
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      if (!is_disjoint(f[i], f[j])) return false;
  return true;
}

inline bool pairwise_noncrossing(const Family& f) {
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j) {
      try {
        if (!is_noncrossing(f[i], f[j])) return false;
      } catch (const tangency_error&) {
        return false;
      }
    }
  return true;
}

inline std::optional<Family> build_disjoint_on_circle(SplitMix64& rng,
                                                      const GenSpec& spec) {
  const long n = spec.count;
  const long radius_units = n * n + 16 * n;
  Family f;
  for (long i = 0; i < n; ++i) {
    // Fraction of the full turn, jittered within the slot.
    Scalar u = Scalar::ratio(i * kDen + rng.range(16, 48), n * kDen);
    Point center = circle_point(units(radius_units), half_angle_tangent(u));
    auto b = body_around(rng, center, 2, spec.vertices);
    if (!b) return std::nullopt;
    f.push_back(std::move(*b));
  }
  return f;
}

inline std::optional<Family> build_disjoint_random(SplitMix64& rng,
                                                   const GenSpec& spec) {
  const long box = 48 * spec.count;
  std::vector<std::pair<long, long>> centers;
  for (int i = 0; i < spec.count; ++i) {
    bool placed = false;
    for (int t = 0; t < 64 && !placed; ++t) {
      long x = rng.range(0, box), y = rng.range(0, box);
      placed = true;
      for (auto [px, py] : centers)
        if (std::max(std::abs(x - px), std::abs(y - py)) < 14) {
          placed = false;
          break;
        }
      if (placed) centers.push_back({x, y});
    }
    if (!placed) return std::nullopt;
  }
  Family f;
  for (auto [x, y] : centers) {
    auto b = body_around(rng, lattice_point(x, y), 4, spec.vertices);
    if (!b) return std::nullopt;
    f.push_back(std::move(*b));
  }
  return f;
}

inline std::optional<Family> build_noncrossing_nested(SplitMix64& rng,
                                                      const GenSpec& spec) {
  const int parents = (spec.count + 1) / 2;
  const int children = spec.count - parents;
  const long box = 64 * parents;
  std::vector<std::pair<long, long>> centers;
  for (int i = 0; i < parents; ++i) {
    bool placed = false;
    for (int t = 0; t < 64 && !placed; ++t) {
      long x = rng.range(0, box), y = rng.range(0, box);
      placed = true;
      for (auto [px, py] : centers)
        if (std::max(std::abs(x - px), std::abs(y - py)) < 24) {
          placed = false;
          break;
        }
      if (placed) centers.push_back({x, y});
    }
    if (!placed) return std::nullopt;
  }
  Family f;
  // Parents contain the lattice diamond |x| + |y| <= 8 around their center,
  // so a child with vertices of 1-norm at most 6 sits strictly inside.
  const std::vector<std::pair<long, long>> diamond{
      {8, 0}, {0, 8}, {-8, 0}, {0, -8}};
  for (auto [x, y] : centers) {
    auto b = body_around(rng, lattice_point(x, y), 8,
                         std::max(spec.vertices, 4), diamond);
    if (!b) return std::nullopt;
    f.push_back(std::move(*b));
  }
  for (int c = 0; c < children; ++c) {
    auto [px, py] = centers[c % parents];
    Point center = lattice_point(px + rng.range(-1, 1), py + rng.range(-1, 1));
    auto b = body_around(rng, center, 2, spec.vertices);
    if (!b) return std::nullopt;
    f.push_back(std::move(*b));
  }
  return f;
}

inline std::optional<Family> build_stabbed_by_line(SplitMix64& rng,
                                                   const GenSpec& spec) {
  // Center heights are a jittered shuffle of distinct spaced values, so no
  // horizontal line can touch three tops or three bottoms. Slanted
  // three-corner alignments thin out as the spacing and the slot jitter
  // grow; the leftovers fall to resampling.
  const long n = spec.count;
  const long s = std::max(1L, n / 8);
  std::vector<long> heights(n);
  for (long i = 0; i < n; ++i) heights[i] = s * (i - n / 2);
  for (long i = n - 1; i > 0; --i) {
    long j = static_cast<long>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(heights[i], heights[j]);
  }
  const long rise = s * (n / 2 + 1) + 6;
  Family f;
  for (long i = 0; i < n; ++i) {
    long h = heights[i] + rng.range(0, s - 1);
    Point center = lattice_point(24 * i + rng.range(0, 10), h);
    // Forced extremes keep every body straddling the x-axis.
    auto b = body_around_box(rng, center, 5, rise, std::max(spec.vertices, 3),
                             {{0, -rise}, {0, rise}});
    if (!b) return std::nullopt;
    f.push_back(std::move(*b));
  }
  return f;
}

inline std::optional<Family> build_case2(SplitMix64& rng,
                                         const GenSpec& spec) {
  Family f;
  const std::vector<std::pair<long, long>> diamond{
      {3, 0}, {0, 3}, {-3, 0}, {0, -3}};
  auto c0 = body_around(rng, lattice_point(0, 0), 3,
                        std::max(spec.vertices, 4), diamond);
  if (!c0) return std::nullopt;
  f.push_back(std::move(*c0));
  const int k = spec.count - 1;
  if (k <= 0) return f;
  // Members sit on a ring inside the upper wedge of directions, spread in
  // half-angle tangent space over two slope-linear pieces so consecutive
  // angles keep comfortable gaps; the wedge spans well under a half turn.
  const int ka = (k + 1) / 2;
  std::vector<Scalar> ts;
  for (int j = 0; j < k; ++j) {
    bool low_piece = j < ka;
    int idx = low_piece ? j : j - ka;
    int slots = low_piece ? ka : k - ka;
    long v = 16 + idx * 44 / std::max(slots, 1) + rng.range(0, 2);
    ts.push_back(low_piece ? Scalar::ratio(v, kDen) : Scalar::ratio(kDen, v));
  }
  std::sort(ts.begin(), ts.end());
  for (int j = 0; j < k; ++j) {
    auto b = body_around(rng, circle_point(units(160), ts[j]), 3,
                         spec.vertices);
    if (!b) return std::nullopt;
    f.push_back(std::move(*b));
  }
  return f;
}

inline bool line_cuts_interior(const Line& l, const ConvexBody& b) {
  auto iv = projection_interval(b, Scalar(l.a), Scalar(l.b));
  return iv.first < Scalar(l.c) && Scalar(l.c) < iv.second;
}

inline bool validate(const Family& f, const GenSpec& spec) {
  for (const ConvexBody& b : f) validate_body(b);
  if (!check_assumptions(f).empty()) return false;
  switch (spec.kind) {
    case FamilyKind::disjoint_on_circle:
      return pairwise_disjoint(f) && is_general_position(f);
    case FamilyKind::disjoint_random:
      return pairwise_disjoint(f);
    case FamilyKind::noncrossing_nested:
      return pairwise_noncrossing(f);
    case FamilyKind::stabbed_by_line:
      return pairwise_disjoint(f) && has_transversal(f).has_value();
    case FamilyKind::case2_tangent_rotation: {
      if (!pairwise_disjoint(f) || !is_general_position(f)) return false;
      if (f.size() < 2) return true;
      Family rest(f.begin() + 1, f.end());
      try {
        TangentRotationResult r = tangent_rotation_order(f[0], rest);
        for (const Line& l : r.tangents)
          for (const ConvexBody& b : f)
            if (line_cuts_interior(l, b)) return false;
      } catch (const geometry_error&) {
        return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace famgen_detail

/// Generates a family of the requested kind, re-validated by the matching
/// predicates; resamples with fresh jitter until validation passes.
/// Deterministic in (kind, count, seed, vertices).
inline Family generate(const GenSpec& spec) {
  if (spec.count < 1 || spec.count > 64)
    throw std::invalid_argument("generate: count must be in [1, 64]");
  if (spec.vertices < 3 || spec.vertices > 12)
    throw std::invalid_argument("generate: vertices must be in [3, 12]");
  if (spec.kind == FamilyKind::case2_tangent_rotation && spec.count > 10)
    throw std::invalid_argument(
        "generate: case2-tangent-rotation capped at 10 bodies");
  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    SplitMix64 rng(spec.seed * 0x9e3779b97f4a7c15ull + attempt + 1);
    std::optional<Family> f;
    switch (spec.kind) {
      case FamilyKind::disjoint_on_circle:
        f = famgen_detail::build_disjoint_on_circle(rng, spec);
        break;
      case FamilyKind::disjoint_random:
        f = famgen_detail::build_disjoint_random(rng, spec);
        break;
      case FamilyKind::noncrossing_nested:
        f = famgen_detail::build_noncrossing_nested(rng, spec);
        break;
      case FamilyKind::stabbed_by_line:
        f = famgen_detail::build_stabbed_by_line(rng, spec);
        break;
      case FamilyKind::case2_tangent_rotation:
        f = famgen_detail::build_case2(rng, spec);
        break;
    }
    if (!f) continue;
    famgen_detail::assign_ids(*f);
    if (famgen_detail::validate(*f, spec)) return *f;
  }
  throw budget_error(std::string("generate: no valid family for kind ") +
                     kind_name(spec.kind) + " within 32 attempts");
}

/// Named example families with frozen coordinates.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "tri3", "bar", "hidden4", "nested", "crossing-bar", "stabbed7"};
  return names;
}

inline Family fixture(const std::string& name) {
  auto body = [](std::string id, std::vector<std::pair<long, long>> vs) {
    ConvexBody b{std::move(id), {}};
    for (auto [x, y] : vs) b.vertices.push_back({Scalar(x), Scalar(y)});
    return b;
  };
  if (name == "tri3")
    return {body("1", {{0, 0}, {1, 0}, {0, 1}}),
            body("2", {{4, 0}, {5, 0}, {4, 1}}),
            body("3", {{2, 3}, {3, 3}, {2, 4}})};
  if (name == "bar")
    return {body("1", {{-8, 0}, {-4, -2}, {-4, 4}}),
            body("2", {{0, -2}, {24, -2}, {24, 4}, {0, 4}}),
            body("3", {{30, 0}, {34, 1}, {30, 2}})};
  if (name == "hidden4")
    return {body("1", {{0, 0}, {6, 0}, {6, 6}, {0, 6}}),
            body("2", {{40, 0}, {46, 0}, {46, 6}, {40, 6}}),
            body("3", {{20, 36}, {26, 36}, {26, 42}, {20, 42}}),
            body("4", {{21, 14}, {25, 14}, {25, 18}, {21, 18}})};
  if (name == "nested")
    return {body("1", {{0, 0}, {20, 0}, {20, 20}, {0, 20}}),
            body("2", {{8, 8}, {12, 8}, {12, 12}, {8, 12}}),
            body("3", {{30, 4}, {38, 4}, {38, 12}, {30, 12}})};
  if (name == "crossing-bar")
    return {body("1", {{0, 8}, {24, 8}, {24, 16}, {0, 16}}),
            body("2", {{8, 0}, {16, 0}, {16, 24}, {8, 24}})};
  if (name == "stabbed7") {
    Family f;
    const long jitter[7] = {-3, -1, -2, 1, 3, 0, 2};
    for (long i = 0; i < 7; ++i) {
      long x = 16 * i, j = jitter[i];
      f.push_back(body(std::to_string(i + 1),
                       {{x, j - 4}, {x + 8, j - 4}, {x + 8, j + 4}, {x, j + 4}}));
    }
    return f;
  }
  throw std::invalid_argument("fixture: unknown name '" + name + "'");
}

}  // namespace bodyorder
