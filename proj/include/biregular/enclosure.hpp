#pragma once

#include <string>

#include "biregular/rational.hpp"

namespace biregular {

// Closed rational interval [lo, hi] containing a real number that usually
// has no finite rational form (sums of square roots). Arithmetic is
// conservative: the exact value of the expression is always inside.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(const Rational& exact) : lo_(exact), hi_(exact) {}
  Enclosure(Rational lo, Rational hi);

  static Enclosure from_int(long v) { return Enclosure(Rational(v)); }

  // sqrt(q) to within 2^-bits; a point interval when q is a rational square.
  static Enclosure sqrt(const Rational& q, unsigned bits);
  // Interval square root; requires hi >= 0, clamps a slightly negative lo.
  Enclosure sqrt(unsigned bits) const;

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  Rational width() const { return hi_ - lo_; }
  bool is_exact() const { return lo_ == hi_; }
  double to_double() const { return mid().get_d(); }

  bool certainly_less(const Enclosure& o) const { return hi_ < o.lo_; }
  bool certainly_le(const Enclosure& o) const { return hi_ <= o.lo_; }
  bool overlaps(const Enclosure& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }

  Enclosure square() const;

  Enclosure& operator+=(const Enclosure& o);
  Enclosure& operator-=(const Enclosure& o);
  Enclosure& operator*=(const Enclosure& o);
  Enclosure& operator/=(const Enclosure& o);  // o must not contain zero

  friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
  friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
  friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
  friend Enclosure operator/(Enclosure a, const Enclosure& b) { return a /= b; }
  friend Enclosure operator-(const Enclosure& a) { return Enclosure(-a.hi_, -a.lo_); }

  // "3.65028153987288474521 ± 1.3e-39"
  std::string to_string(int digits = 20) const;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

}  // namespace biregular
