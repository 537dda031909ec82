#include "biregular/poly.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "biregular/errors.hpp"

namespace biregular {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly RatPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_power(const Rational& root, int multiplicity) {
  RatPoly result = constant(1);
  const RatPoly factor({-root, Rational(1)});
  for (int i = 0; i < multiplicity; ++i) result = result * factor;
  return result;
}

RatPoly RatPoly::from_roots(const std::vector<Rational>& roots) {
  RatPoly result = constant(1);
  for (const auto& r : roots) result = result * RatPoly({-r, Rational(1)});
  return result;
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RatPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly r = *this;
  const Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

RatPoly RatPoly::reflect() const {
  RatPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && i > 0;
    if (!unit) os << mag.get_str() << (i > 0 ? "*" : "");
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw InvalidInput("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPoly{}, num};
  std::vector<Rational> rem = num.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rational(0));
  const int dd = den.degree();
  const Rational& lead = den.leading();
  for (int i = num.degree(); i >= dd; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * den.coeff(j);
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RatPoly square_free_part(const RatPoly& p) {
  if (p.degree() <= 0) return p.monic();
  const RatPoly g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

std::vector<RatPoly> square_free_decomposition(const RatPoly& p) {
  std::vector<RatPoly> factors;
  if (p.degree() <= 0) return factors;
  const RatPoly dp = p.derivative();
  RatPoly a = gcd(p, dp);
  RatPoly b = divmod(p, a).quotient;
  RatPoly c = divmod(dp, a).quotient;
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    a = gcd(b, d);
    factors.push_back(a.monic());
    b = divmod(b, a).quotient;
    c = divmod(d, a).quotient;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

RatPoly s_transform(const RatPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(2 * p.degree()) + 1, Rational(0));
  for (int i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(2 * i)] = p.coeff(i);
  return RatPoly(std::move(v));
}

RatPoly v_transform(const RatPoly& p, int m, int n) {
  if (m < n) throw InvalidInput("v_transform needs m >= n");
  if (p.degree() != n) throw InvalidInput("v_transform needs deg p == n");
  std::vector<Rational> v(static_cast<std::size_t>(m - n), Rational(0));
  v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(v));
}

RatPoly divide_out_root(const RatPoly& p, const Rational& rho) {
  if (p.is_zero()) return {};
  // synthetic division, highest degree first
  const int deg = p.degree();
  std::vector<Rational> q(static_cast<std::size_t>(std::max(deg, 0)), Rational(0));
  Rational carry = 0;
  for (int i = deg; i >= 1; --i) {
    carry = carry * rho + p.coeff(i);
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  const Rational remainder = carry * rho + p.coeff(0);
  if (remainder != 0) {
    throw NotARoot(rho.get_str() + " is not a root of " + p.to_string());
  }
  return RatPoly(std::move(q));
}

Rational cauchy_bound(const RatPoly& p) {
  if (p.is_zero()) throw InvalidInput("Cauchy bound of the zero polynomial");
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
  return m + 1;
}

namespace {

int sign_of(const Rational& q) { return sgn(q); }

// Smallest power of two >= q (q > 0).
Rational power_of_two_above(const Rational& q) {
  Rational b = 1;
  while (b < q) b *= 2;
  return b;
}

}  // namespace

SturmSequence::SturmSequence(const RatPoly& p) {
  if (p.is_zero()) throw InvalidInput("Sturm sequence of the zero polynomial");
  chain_.push_back(square_free_part(p));
  RatPoly next = chain_.front().derivative();
  while (!next.is_zero()) {
    // positive rescaling keeps the sign pattern and the numbers small
    next *= Rational(1) / abs(next.leading());
    chain_.push_back(next);
    const std::size_t k = chain_.size();
    next = -divmod(chain_[k - 2], chain_[k - 1]).remainder;
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& f : chain_) {
    const int s = sign_of(f(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int changes = 0;
  int last = 0;
  for (const auto& f : chain_) {
    int s = sign_of(f.leading());
    if (!positive && f.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) throw InvalidInput("Sturm count needs lo < hi");
  return variations(lo) - variations(hi);
}

int SturmSequence::count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

int sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi) {
  return SturmSequence(p).count(lo, hi);
}

Rational default_root_tolerance() { return pow2_neg(64); }

RootBracket refine_max_root(const SturmSequence& seq, RootBracket bracket, const Rational& tol) {
  while (bracket.hi - bracket.lo > tol) {
    Rational mid = (bracket.lo + bracket.hi) / 2;
    if (seq.count(mid, bracket.hi) > 0) {
      bracket.lo = std::move(mid);
    } else {
      bracket.hi = std::move(mid);
    }
  }
  bracket.count = seq.count(bracket.lo, bracket.hi);
  return bracket;
}

RootBracket max_root(const RatPoly& p, const Rational& tol) {
  if (p.is_zero()) throw InvalidInput("max_root of the zero polynomial");
  if (tol <= 0) throw InvalidInput("max_root tolerance must be positive");
  const SturmSequence seq(p);
  if (p.degree() < 1 || seq.count_all() == 0) throw NoRealRoot("no real root: " + p.to_string());
  const Rational b = power_of_two_above(cauchy_bound(p));
  return refine_max_root(seq, RootBracket{-b, b, 0}, tol);
}

bool is_real_rooted(const RatPoly& p) {
  if (p.is_zero()) return false;
  int real = 0;
  int mult = 1;
  for (const auto& f : square_free_decomposition(p)) {
    real += mult * SturmSequence(f).count_all();
    ++mult;
  }
  return real == p.degree();
}

bool has_nonnegative_roots(const RatPoly& p) {
  if (!is_real_rooted(p)) return false;
  if (p.degree() < 1) return true;
  const SturmSequence seq(p);
  const Rational b = power_of_two_above(cauchy_bound(p));
  const int at_or_below_zero = seq.count(-b, Rational(0));
  const int zero_root = seq.square_free()(Rational(0)) == 0 ? 1 : 0;
  return at_or_below_zero == zero_root;
}

std::strong_ordering compare_max_roots(const RatPoly& p, const RatPoly& q) {
  const SturmSequence sp(p), sq(q);
  Rational tol = pow2_neg(16);
  RootBracket bp = max_root(p, tol), bq = max_root(q, tol);
  std::optional<SturmSequence> common;
  for (int round = 0; round < 512; ++round) {
    // roots lie in (lo, hi], so touching brackets are already strict
    if (bp.hi <= bq.lo) return std::strong_ordering::less;
    if (bq.hi <= bp.lo) return std::strong_ordering::greater;
    const Rational lo = std::min(bp.lo, bq.lo), hi = std::max(bp.hi, bq.hi);
    if (sp.count(lo, hi) == 1 && sq.count(lo, hi) == 1) {
      if (!common) {
        const RatPoly g = gcd(p, q);
        if (g.degree() < 1) {
          common.emplace(RatPoly::constant(1));
        } else {
          common.emplace(g);
        }
      }
      if (common->square_free().degree() >= 1 && common->count(lo, hi) >= 1) return std::strong_ordering::equal;
    }
    tol /= 65536;
    bp = refine_max_root(sp, bp, tol);
    bq = refine_max_root(sq, bq, tol);
  }
  throw InternalError("max-root comparison did not resolve: " + p.to_string() + " vs " + q.to_string());
}

void write_poly(std::ostream& os, const RatPoly& p) {
  os << p.degree() << '\n';
  for (const auto& c : p.coeffs()) os << to_fraction_string(c) << '\n';
}

RatPoly read_poly(std::istream& is) {
  long degree = 0;
  if (!(is >> degree) || degree < -1) throw InvalidInput("polynomial record: bad degree line");
  std::vector<Rational> coeffs;
  for (long i = 0; i <= degree; ++i) {
    std::string tok;
    if (!(is >> tok)) throw InvalidInput("polynomial record: missing coefficient " + std::to_string(i));
    coeffs.push_back(parse_rational(tok));
  }
  RatPoly p(std::move(coeffs));
  if (p.degree() != degree) throw InvalidInput("polynomial record: leading coefficient is zero");
  return p;
}

std::string poly_to_record(const RatPoly& p) {
  std::ostringstream os;
  write_poly(os, p);
  return os.str();
}

RatPoly poly_from_record(const std::string& text) {
  std::istringstream is(text);
  return read_poly(is);
}

}  // namespace biregular
