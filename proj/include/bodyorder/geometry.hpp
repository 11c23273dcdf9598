#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "bodyorder/scalar.hpp"

namespace bodyorder {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic; used for sorting and map keys, has no geometric meaning.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline Scalar cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Sign of the signed area of triangle (p, q, r): +1 counterclockwise,
/// -1 clockwise, 0 collinear.
inline int orient3(const Point& p, const Point& q, const Point& r) {
  return cross(p, q, r).sign();
}

/// Integer vector with full-circle identity: (1,0) and (-1,0) differ.
/// Normalized to coprime components by the factory functions.
struct IVec {
  mpz_class x;
  mpz_class y;

  bool is_zero() const { return x == 0 && y == 0; }
  IVec operator-() const { return {-x, -y}; }
  friend IVec operator+(const IVec& a, const IVec& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend bool operator==(const IVec&, const IVec&) = default;
  friend bool operator<(const IVec& a, const IVec& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  }
};

inline mpz_class cross(const IVec& a, const IVec& b) {
  return a.x * b.y - a.y * b.x;
}

inline mpz_class dot(const IVec& a, const IVec& b) {
  return a.x * b.x + a.y * b.y;
}

/// Divides out the gcd, keeping orientation. Zero stays zero.
inline IVec reduce(IVec v) {
  if (v.is_zero()) return v;
  mpz_class g = gcd(v.x, v.y);
  return {v.x / g, v.y / g};
}

/// Exact integer vector along q - p after clearing denominators.
inline IVec ivec_between(const Point& p, const Point& q) {
  Scalar dx = q.x - p.x;
  Scalar dy = q.y - p.y;
  return reduce({dx.num() * dy.den(), dy.num() * dx.den()});
}

/// Counterclockwise perpendicular.
inline IVec perp(const IVec& v) { return {-v.y, v.x}; }

/// Half-plane index for angular sweeps: 0 for angles in [0, pi) measured
/// from the positive x-axis, 1 for [pi, 2*pi).
inline int angular_half(const IVec& v) {
  if (v.is_zero()) throw std::invalid_argument("angular_half: zero vector");
  int ys = sgn(v.y);
  if (ys > 0 || (ys == 0 && sgn(v.x) > 0)) return 0;
  return 1;
}

/// Strict full-circle angular order starting at the positive x-axis.
inline bool angular_less(const IVec& a, const IVec& b) {
  int ha = angular_half(a), hb = angular_half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

/// Strict angular order of a and b by counterclockwise angle from ref,
/// where angles are taken in (0, 2*pi] (ref itself sorts last).
inline bool angular_less_from(const IVec& ref, const IVec& a, const IVec& b) {
  // 0: strictly ccw side of ref, 1: opposite ray, 2: strictly cw side,
  // 3: ref's own ray. Within classes 0 and 2, order by pairwise cross sign.
  auto cls = [&ref](const IVec& v) {
    int cs = sgn(cross(ref, v));
    if (cs > 0) return 0;
    if (cs < 0) return 2;
    return sgn(dot(ref, v)) < 0 ? 1 : 3;
  };
  int ca = cls(a), cb = cls(b);
  if (ca != cb) return ca < cb;
  if (ca == 0 || ca == 2) return sgn(cross(a, b)) > 0;
  return false;
}

/// Direction of an undirected line: v and -v are identified. Normalized so
/// components are coprime and the first nonzero component is positive.
struct Direction {
  mpz_class dx;
  mpz_class dy;

  IVec vec() const { return {dx, dy}; }
  friend bool operator==(const Direction&, const Direction&) = default;
  friend bool operator<(const Direction& a, const Direction& b) {
    int c = cmp(a.dx, b.dx);
    if (c != 0) return c < 0;
    return cmp(a.dy, b.dy) < 0;
  }
};

inline Direction direction_of(const IVec& v) {
  if (v.is_zero()) throw std::invalid_argument("direction_of: zero vector");
  IVec r = reduce(v);
  int lead = sgn(r.x) != 0 ? sgn(r.x) : sgn(r.y);
  if (lead < 0) r = -r;
  return {r.x, r.y};
}

inline Direction direction_between(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("direction_between: equal points");
  return direction_of(ivec_between(p, q));
}

/// Line a*x + b*y = c with integer coprime coefficients; the first nonzero
/// coefficient among (a, b) is positive.
struct Line {
  mpz_class a;
  mpz_class b;
  mpz_class c;

  friend bool operator==(const Line&, const Line&) = default;
  friend bool operator<(const Line& u, const Line& v) {
    int s = cmp(u.a, v.a);
    if (s != 0) return s < 0;
    s = cmp(u.b, v.b);
    if (s != 0) return s < 0;
    return cmp(u.c, v.c) < 0;
  }

  /// a*x + b*y - c; sign tells the side.
  Scalar eval(const Point& p) const {
    return Scalar(a) * p.x + Scalar(b) * p.y - Scalar(c);
  }

  std::string str() const {
    return a.get_str() + "*x + " + b.get_str() + "*y = " + c.get_str();
  }
};

/// Line with normal vector n through all points x with n.x = v.
inline Line line_from_normal(const IVec& n, const Scalar& v) {
  if (n.is_zero()) throw std::invalid_argument("line_from_normal: zero normal");
  // Clear the offset's denominator, then reduce and fix signs.
  mpz_class a = n.x * v.den();
  mpz_class b = n.y * v.den();
  mpz_class c = v.num();
  mpz_class g = gcd(gcd(a, b), c);
  if (g != 0) {
    a /= g;
    b /= g;
    c /= g;
  }
  int lead = sgn(a) != 0 ? sgn(a) : sgn(b);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

inline Line line_through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line_through: equal points");
  IVec n = perp(ivec_between(p, q));
  Scalar v = Scalar(n.x) * p.x + Scalar(n.y) * p.y;
  return line_from_normal(n, v);
}

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << p.str();
}

inline std::ostream& operator<<(std::ostream& os, const Line& l) {
  return os << l.str();
}

}  // namespace bodyorder
