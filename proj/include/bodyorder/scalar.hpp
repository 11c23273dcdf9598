#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bodyorder {

/// Exact rational number. Always stored reduced, with a positive denominator,
/// so equal values have equal representations.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(int n) : q_(static_cast<long>(n)) {}
  Scalar(long n) : q_(n) {}
  explicit Scalar(const mpz_class& n) : q_(n) {}
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Scalar ratio(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    Scalar s;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }

  static Scalar ratio(long num, long den) {
    return ratio(mpz_class(num), mpz_class(den));
  }

  /// Parses "n" or "n/d" in base 10.
  static Scalar parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
      throw std::invalid_argument("Scalar: cannot parse '" + text + "'");
    if (q.get_den() == 0)
      throw std::invalid_argument("Scalar: zero denominator in '" + text + "'");
    q.canonicalize();
    Scalar s;
    s.q_ = std::move(q);
    return s;
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  /// "n" when integral, otherwise "n/d", reduced.
  std::string str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

  /// Lossy; for rendering only.
  double approx() const { return q_.get_d(); }

  Scalar operator-() const {
    Scalar r;
    r.q_ = -q_;
    return r;
  }

  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace bodyorder
