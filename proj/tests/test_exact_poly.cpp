#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "biregular/enclosure.hpp"
#include "biregular/errors.hpp"
#include "biregular/oracle.hpp"
#include "biregular/poly.hpp"
#include "support.hpp"

using namespace biregular;

namespace {

RatPoly P(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long v : low_to_high) c.emplace_back(v);
  return RatPoly(c);
}

}  // namespace

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(Rational(-7, 4), 3) == "-1.750");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 4) == 0);
  CHECK(factorial(5) == 120);
}

TEST_CASE("enclosure sqrt") {
  const Enclosure two = Enclosure::sqrt(Rational(2), 100);
  CHECK(two.lo() * two.lo() <= 2);
  CHECK(two.hi() * two.hi() >= 2);
  CHECK(two.width() <= pow2_neg(100));
  CHECK(Enclosure::sqrt(Rational(9, 4), 64).is_exact());
  CHECK(Enclosure::sqrt(Rational(9, 4), 64).lo() == Rational(3, 2));
}

TEST_CASE("S transform") {
  CHECK(s_transform(P({-4, 1})) == P({-4, 0, 1}));
  CHECK(s_transform(P({1})) == P({1}));
  CHECK(s_transform(P({3, -4, 1})) == P({3, 0, -4, 0, 1}));
}

TEST_CASE("V transform") {
  CHECK(v_transform(P({-2, 1}), 3, 1) == P({0, 0, -2, 1}));
  const RatPoly p = P({3, -4, 1});
  CHECK(v_transform(p, 2, 2) == p);
  CHECK(v_transform(RatPoly::linear_power(2, 2), 4, 2) == RatPoly::monomial(2) * RatPoly::linear_power(2, 2));
  CHECK_THROWS_AS(v_transform(p, 1, 2), InvalidInput);
}

TEST_CASE("divide out a root") {
  CHECK(divide_out_root(P({3, -4, 1}), 3) == P({-1, 1}));
  CHECK(divide_out_root(RatPoly::linear_power(2, 2), 2) == P({-2, 1}));
  CHECK_THROWS_AS(divide_out_root(P({3, -4, 1}), 2), NotARoot);
}

TEST_CASE("divide out the trivial root of the claw union gram polynomial") {
  // two independently permuted 2-claw matchings on 4 + 2 vertices
  const RatMatrix c = claw_matrix(2, 2);
  const RatPoly full = expected_bipartite_charpoly_bruteforce(c, c);
  const RatPoly gram = gram_from_bipartite(full, 4, 2);
  CHECK(divide_out_root(gram, 8) == P({-4, 1}));
}

TEST_CASE("sturm counts") {
  CHECK(sturm_count(P({-2, 0, 1}), 1, 2) == 1);
  CHECK(sturm_count(P({1, 0, 1}), -10, 10) == 0);
  CHECK(sturm_count(P({3, -4, 1}), 0, 10) == 2);
  // half-open (lo, hi]
  CHECK(sturm_count(P({3, -4, 1}), 1, 3) == 1);
  CHECK(sturm_count(P({3, -4, 1}), 0, 1) == 1);
  CHECK_THROWS_AS(sturm_count(RatPoly(), 0, 1), InvalidInput);
}

TEST_CASE("max root brackets") {
  const Rational tol = default_root_tolerance();
  auto around = [&](const RootBracket& b, double v) {
    CHECK(b.width() <= tol);
    CHECK(b.mid() == doctest::Approx(v).epsilon(1e-15));
  };
  around(max_root(P({3, -4, 1})), 3.0);
  around(max_root(RatPoly::linear_power(2, 5)), 2.0);
  // (x^2 - theta)^n at theta = 2: the d = 1 bound polynomial
  RatPoly q = P({1});
  for (int i = 0; i < 3; ++i) q = q * P({-2, 0, 1});
  around(max_root(q), std::sqrt(2.0));
  CHECK_THROWS_AS(max_root(P({1, 0, 1})), NoRealRoot);
  CHECK(max_root(P({3, -4, 1})).hi >= 3);
  CHECK(max_root(P({3, -4, 1})).lo < 3);
}

TEST_CASE("real-rootedness") {
  CHECK_FALSE(is_real_rooted(P({1, 0, 1})));
  CHECK(is_real_rooted(RatPoly::linear_power(1, 3)));
  CHECK(has_nonnegative_roots(P({3, -4, 1})));
  CHECK_FALSE(has_nonnegative_roots(P({-3, -2, 1})));
}

TEST_CASE("compare max roots") {
  CHECK(compare_max_roots(P({3, -4, 1}), P({-2, 1})) == std::strong_ordering::greater);
  CHECK(compare_max_roots(P({-2, 0, 1}), P({-3, 0, 1})) == std::strong_ordering::less);
  // shared irrational max root
  const RatPoly a = P({-2, 0, 1}) * P({1, 1});
  const RatPoly b = P({-2, 0, 1}) * P({-1, 1});
  CHECK(compare_max_roots(a, b) == std::strong_ordering::equal);
}

TEST_CASE("polynomial records round trip") {
  const RatPoly p({Rational(-3, 7), Rational(0), Rational(5, 2), Rational(1)});
  CHECK(poly_from_record(poly_to_record(p)) == p);
  CHECK(poly_from_record(poly_to_record(RatPoly())) == RatPoly());
  CHECK(poly_to_record(P({3, -4, 1})) == "2\n3/1\n-4/1\n1/1\n");
  CHECK_THROWS_AS(poly_from_record("2\n1/1\n"), InvalidInput);
}

TEST_CASE("property: division identity and gcd of products") {
  testing::Gen g(11);
  for (int iter = 0; iter < 40; ++iter) {
    const auto common = g.roots(g.uniform(0, 3), 12, 3);
    auto ra = g.roots(g.uniform(0, 3), 12, 3), rb = g.roots(g.uniform(0, 3), 12, 3);
    ra.insert(ra.end(), common.begin(), common.end());
    rb.insert(rb.end(), common.begin(), common.end());
    const RatPoly a = RatPoly::from_roots(ra) * g.rational(1, 5, 3), b = RatPoly::from_roots(rb);
    const DivMod qr = divmod(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(qr.remainder.degree() < b.degree());
    // gcd divides both and has at least the common roots
    const RatPoly gg = gcd(a, b);
    CHECK(divmod(a, gg).remainder.is_zero());
    CHECK(divmod(b, gg).remainder.is_zero());
    CHECK(divmod(gg, square_free_part(RatPoly::from_roots(common))).remainder.is_zero());
  }
}

TEST_CASE("property: sturm counts match known roots") {
  testing::Gen g(12);
  for (int iter = 0; iter < 60; ++iter) {
    auto roots = g.roots(g.uniform(1, 6), 30, 4);
    for (auto& r : roots) r -= 3;
    const RatPoly p = RatPoly::from_roots(roots);
    const Rational lo = g.rational(-16, 12, 4), hi = lo + g.rational(1, 20, 4);
    std::vector<Rational> distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto inside = std::count_if(distinct.begin(), distinct.end(),
                                      [&](const Rational& r) { return lo < r && r <= hi; });
    CHECK(sturm_count(p, lo, hi) == inside);
    const RootBracket b = max_root(p);
    CHECK(b.lo < distinct.back());
    CHECK(distinct.back() <= b.hi);
    CHECK(is_real_rooted(p));
    CHECK(square_free_part(p).degree() == static_cast<int>(distinct.size()));
  }
}

TEST_CASE("property: square-free decomposition reassembles") {
  testing::Gen g(13);
  for (int iter = 0; iter < 30; ++iter) {
    const RatPoly p = RatPoly::from_roots(g.roots(g.uniform(1, 7), 4, 1)) * Rational(3, 2);
    const auto parts = square_free_decomposition(p);
    RatPoly prod = RatPoly::constant(p.leading());
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t e = 0; e <= i; ++e) prod = prod * parts[i];
    CHECK(prod == p);
  }
}

TEST_CASE("property: cauchy bound dominates roots") {
  testing::Gen g(14);
  for (int iter = 0; iter < 30; ++iter) {
    auto roots = g.roots(g.uniform(1, 5), 40, 3);
    for (auto& r : roots) r -= 6;
    const RatPoly p = RatPoly::from_roots(roots);
    const Rational b = cauchy_bound(p);
    for (const auto& r : roots) CHECK(abs(r) < b);
  }
}
