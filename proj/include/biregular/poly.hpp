#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "biregular/rational.hpp"

namespace biregular {

// Dense univariate polynomial over the rationals, lowest degree first.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients and
// degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c) { return RatPoly({c}); }
  static RatPoly monomial(int degree, const Rational& c = 1);
  // (x - root)^multiplicity
  static RatPoly linear_power(const Rational& root, int multiplicity);
  static RatPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  RatPoly derivative() const;
  RatPoly monic() const;
  // p(-x)
  RatPoly reflect() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(const RatPoly& a) { return a * Rational(-1); }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  // "x^2 - 4*x + 3" style, for logs and error messages.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};

// Euclidean division; throws InvalidInput when dividing by zero.
DivMod divmod(const RatPoly& num, const RatPoly& den);
// Monic gcd (zero only when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
// p / gcd(p, p'), monic.
RatPoly square_free_part(const RatPoly& p);
// Yun's algorithm: p = lc * prod_i factors[i]^(i+1), each factor monic and
// square-free, pairwise coprime.
std::vector<RatPoly> square_free_decomposition(const RatPoly& p);

// p(x^2)
RatPoly s_transform(const RatPoly& p);
// x^(m-n) p(x); requires m >= n and deg p == n.
RatPoly v_transform(const RatPoly& p, int m, int n);
// p / (x - rho), exact; throws NotARoot when p(rho) != 0.
RatPoly divide_out_root(const RatPoly& p, const Rational& rho);

// 1 + max |a_i / a_lead|: every complex root has modulus below this.
Rational cauchy_bound(const RatPoly& p);

// Sturm chain of the square-free part of a polynomial, built once and
// evaluated at many points.
class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& p);

  // Distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  // Distinct real roots overall.
  int count_all() const;
  const RatPoly& square_free() const { return chain_.front(); }

 private:
  int variations(const Rational& x) const;
  int variations_at_infinity(bool positive) const;
  std::vector<RatPoly> chain_;
};

// Distinct real roots of p in (lo, hi]. Throws InvalidInput on the zero
// polynomial or lo >= hi.
int sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi);

// Half-open interval (lo, hi] holding `count` distinct roots.
struct RootBracket {
  Rational lo;
  Rational hi;
  int count = 0;

  Rational width() const { return hi - lo; }
  double mid() const { return Rational((lo + hi) / 2).get_d(); }
};

// Default isolation width, 2^-64.
Rational default_root_tolerance();

// Bracket of width <= tol around the largest real root. Throws NoRealRoot.
RootBracket max_root(const RatPoly& p, const Rational& tol = default_root_tolerance());
// Continue bisecting an existing max-root bracket of p down to width <= tol.
RootBracket refine_max_root(const SturmSequence& seq, RootBracket bracket, const Rational& tol);

// True iff every root of p (with multiplicity) is real.
bool is_real_rooted(const RatPoly& p);
// Real-rooted and no root below zero.
bool has_nonnegative_roots(const RatPoly& p);

// Exact three-way comparison of the largest real roots of p and q. Brackets
// are refined until disjoint; overlapping brackets that isolate a common root
// of gcd(p, q) are reported equal.
std::strong_ordering compare_max_roots(const RatPoly& p, const RatPoly& q);

// Text record: degree on the first line, then one "num/den" coefficient per
// line from x^0 upward. The zero polynomial is written as degree -1.
void write_poly(std::ostream& os, const RatPoly& p);
RatPoly read_poly(std::istream& is);
std::string poly_to_record(const RatPoly& p);
RatPoly poly_from_record(const std::string& text);

}  // namespace biregular
