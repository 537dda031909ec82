#include "biregular/enclosure.hpp"

#include <algorithm>
#include <cstdio>

#include "biregular/errors.hpp"

namespace biregular {

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw InvalidInput("enclosure with lo > hi");
}

namespace {

Rational fraction(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Enclosure Enclosure::sqrt(const Rational& q, unsigned bits) {
  if (q < 0) throw InvalidInput("square root of a negative rational");
  // sqrt(a/b) = sqrt(a*b)/b
  const Integer ab = q.get_num() * q.get_den();
  if (mpz_perfect_square_p(ab.get_mpz_t()) != 0) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), ab.get_mpz_t());
    return Enclosure(fraction(root, q.get_den()));
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  const Integer scaled = ab * scale * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());  // floor
  const Integer den = q.get_den() * scale;
  return Enclosure(fraction(root, den), fraction(root + 1, den));
}

Enclosure Enclosure::sqrt(unsigned bits) const {
  if (hi_ < 0) throw InvalidInput("square root of a negative enclosure");
  const Rational lo = lo_ < 0 ? Rational(0) : lo_;
  return Enclosure(sqrt(lo, bits).lo_, sqrt(hi_, bits).hi_);
}

Enclosure Enclosure::square() const {
  if (lo_ >= 0) return Enclosure(lo_ * lo_, hi_ * hi_);
  if (hi_ <= 0) return Enclosure(hi_ * hi_, lo_ * lo_);
  return Enclosure(Rational(0), std::max(lo_ * lo_, hi_ * hi_));
}

Enclosure& Enclosure::operator+=(const Enclosure& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& o) {
  lo_ -= o.hi_;
  hi_ -= o.lo_;
  return *this;
}

Enclosure& Enclosure::operator*=(const Enclosure& o) {
  const Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Enclosure& Enclosure::operator/=(const Enclosure& o) {
  if (o.lo_ <= 0 && o.hi_ >= 0) throw InvalidInput("division by an enclosure containing zero");
  Rational inv_lo = 1 / o.hi_;
  Rational inv_hi = 1 / o.lo_;
  return *this *= Enclosure(std::move(inv_lo), std::move(inv_hi));
}

std::string Enclosure::to_string(int digits) const {
  std::string s = to_decimal(mid(), digits);
  if (is_exact()) return s + " (exact)";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", Rational(width() / 2).get_d());
  return s + " ± " + buf;
}

}  // namespace biregular
