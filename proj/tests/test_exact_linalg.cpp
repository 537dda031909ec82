#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "biregular/errors.hpp"
#include "biregular/matrix.hpp"
#include "biregular/oracle.hpp"
#include "biregular/parallel.hpp"
#include "support.hpp"

using namespace biregular;

namespace {

RatPoly from_berkowitz(const RatMatrix& m) {
  std::vector<Integer> flat;
  for (const auto& e : m.entries()) flat.push_back(e.get_num());
  const auto high_to_low = berkowitz_charpoly(flat, m.rows());
  std::vector<Rational> c;
  for (auto it = high_to_low.rbegin(); it != high_to_low.rend(); ++it) c.emplace_back(*it);
  return RatPoly(c);
}

}  // namespace

TEST_CASE("determinant") {
  CHECK(determinant(RatMatrix::identity(3)) == 1);
  CHECK(determinant(RatMatrix::identity(2) + RatMatrix::ones(2, 2)) == 3);
  CHECK(determinant(RatMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), InvalidInput);
  CHECK(determinant(RatMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(RatMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("property: determinant equals cofactor expansion") {
  testing::Gen g(21);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = g.uniform(1, 5);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = g.rational(-6, 6, 4);
    CHECK(determinant(m) == testing::cofactor_det(m));
  }
}

TEST_CASE("gram charpoly") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) CHECK(gram_charpoly(claw_matrix(n, k)) == RatPoly::linear_power(k, n));
  CHECK(gram_charpoly(RatMatrix(4, 2)) == RatPoly::monomial(2));
  // rank-one Gram of the complete biregular graph: one root at ||J||_F^2 = k n * n
  const int n = 3, k = 2;
  const RatPoly expect = RatPoly::monomial(n - 1) * RatPoly::linear_power(k * n * n, 1);
  CHECK(gram_charpoly(RatMatrix::ones(k * n, n)) == expect);
}

TEST_CASE("property: charpoly matches Berkowitz on integer matrices") {
  testing::Gen g(22);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = g.uniform(1, 6);
    const RatMatrix m = g.int_matrix(n, n, -5, 5);
    CHECK(charpoly(m) == from_berkowitz(m));
    CHECK(charpoly_plus(m) == charpoly(m * Rational(-1)));
  }
}

TEST_CASE("property: charpoly independent of worker count") {
  testing::Gen g(23);
  const RatMatrix m = g.int_matrix(6, 6, -4, 4);
  const int saved = worker_count();
  set_worker_count(1);
  const RatPoly one = charpoly(m);
  set_worker_count(4);
  const RatPoly four = charpoly(m);
  set_worker_count(saved);
  CHECK(one == four);
}

TEST_CASE("bipartite embedding") {
  const RatMatrix e = bipartite_embed(RatMatrix::identity(1));
  CHECK(e == RatMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(charpoly(e) == RatPoly({Rational(-1), Rational(0), Rational(1)}));
}

TEST_CASE("property: bipartite spectrum is the S transform of the Gram spectrum") {
  testing::Gen g(24);
  for (int iter = 0; iter < 20; ++iter) {
    const int n = g.uniform(1, 3), m = n + g.uniform(0, 2);
    const RatMatrix a = g.int_matrix(m, n, -3, 3);
    CHECK(charpoly(bipartite_embed(a)) == v_transform(s_transform(gram_charpoly(a)), m + n, 2 * n));
  }
}

TEST_CASE("claw matrix spectrum against a dense eigensolver") {
  const RatMatrix c = claw_matrix(2, 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(testing::to_eigen(bipartite_embed(c)));
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  const double r = std::sqrt(2.0);
  const std::vector<double> expect{-r, -r, 0, 0, r, r};
  REQUIRE(ev.size() == expect.size());
  for (std::size_t i = 0; i < ev.size(); ++i) CHECK(ev[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("claw blocks") {
  CHECK(claw_matrix(1, 3) == RatMatrix::ones(3, 1));
  CHECK(claw_block(3, 0, 2) == claw_matrix(3, 2));
  const RatMatrix c = claw_matrix(4, 3);
  for (int j = 0; j < 4; ++j) {
    Rational sum = 0;
    for (int i = 0; i < 12; ++i) sum += c(i, j);
    CHECK(sum == 3);
  }
  const RatMatrix b = claw_block(1, 2, 2);
  CHECK(b.rows() == 6);
  CHECK(b.cols() == 3);
  CHECK(b(0, 0) == 1);
  CHECK(b(1, 0) == 1);
  CHECK(b(2, 1) == 0);
}

TEST_CASE("minors") {
  const RatMatrix i3 = RatMatrix::identity(3);
  CHECK(minor(i3, {}, {}) == 1);
  CHECK(minor(i3, {1, 2}, {1, 2}) == 1);
  CHECK(minor(i3, {1, 2}, {2, 3}) == 0);
  CHECK_THROWS_AS(minor(i3, {1, 2}, {1}), InvalidInput);
  CHECK_THROWS_AS(minor(i3, {4}, {1}), InvalidInput);
}

TEST_CASE("index sets") {
  CHECK(IndexSet::subsets(4, 2).size() == 6);
  CHECK(IndexSet::subsets(4, 2).front() == IndexSet{1, 2});
  CHECK(IndexSet::subsets(4, 2).back() == IndexSet{3, 4});
  CHECK(IndexSet{2, 4}.complement(5) == IndexSet{1, 3, 5});
  CHECK(IndexSet{2, 4}.sum() == 6);
  CHECK_THROWS_AS(IndexSet({3, 1}), InvalidInput);
}

TEST_CASE("determinant of a sum by minors") {
  const RatMatrix a = RatMatrix::from_rows({{2, 1}, {0, 3}});
  CHECK(det_sum_expansion(a, RatMatrix(2, 2)) == determinant(a));
  CHECK(det_sum_expansion(RatMatrix::identity(2), RatMatrix::ones(2, 2)) == 3);
  CHECK_THROWS_AS(det_sum_expansion(a, RatMatrix(3, 3)), InvalidInput);
  testing::Gen g(25);
  for (int iter = 0; iter < 20; ++iter) {
    const RatMatrix x = g.int_matrix(4, 4, -4, 4), y = g.int_matrix(4, 4, -4, 4);
    CHECK(det_sum_expansion(x, y) == testing::cofactor_det(x + y));
  }
}

TEST_CASE("Cauchy-Binet") {
  const RatMatrix i3 = RatMatrix::identity(3);
  for (const auto& s : IndexSet::subsets(3, 2))
    for (const auto& t : IndexSet::subsets(3, 2)) CHECK(cauchy_binet(i3, i3, s, t) == (s == t ? 1 : 0));
  testing::Gen g(26);
  for (int iter = 0; iter < 20; ++iter) {
    const RatMatrix a = g.int_matrix(3, 4, -3, 3), b = g.int_matrix(4, 3, -3, 3);
    const RatMatrix ab = a * b;
    for (const auto& s : IndexSet::subsets(3, 2))
      for (const auto& t : IndexSet::subsets(3, 2))
        CHECK(cauchy_binet(a, b, s, t) == testing::cofactor_det(submatrix(ab, s, t)));
    // full inner dimension: the sum has a single term
    const RatMatrix sq = g.int_matrix(3, 3, -3, 3), sq2 = g.int_matrix(3, 3, -3, 3);
    CHECK(cauchy_binet(sq, sq2, IndexSet::range(3), IndexSet::range(3)) == determinant(sq) * determinant(sq2));
  }
  CHECK_THROWS_AS(cauchy_binet(RatMatrix(2, 3), RatMatrix(2, 3), {1}, {1}), InvalidInput);
}

TEST_CASE("characteristic polynomial from principal minors") {
  CHECK(charpoly_via_principal_minors(RatMatrix(3, 3)) == RatPoly::monomial(3));
  CHECK(charpoly_via_principal_minors(RatMatrix::identity(2)) == RatPoly::linear_power(-1, 2));
  CHECK_THROWS_AS(charpoly_via_principal_minors(RatMatrix(9, 9)), InvalidInput);
  testing::Gen g(27);
  for (int iter = 0; iter < 20; ++iter) {
    RatMatrix m = g.int_matrix(4, 4, -4, 4);
    m = m + m.transpose();
    CHECK(charpoly_via_principal_minors(m) == from_berkowitz(m * Rational(-1)));
  }
}

TEST_CASE("interpolation") {
  const RatPoly p({Rational(1, 2), Rational(-3), Rational(0), Rational(2)});
  std::vector<Rational> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs.emplace_back(i * 2 - 1);
    ys.push_back(p(xs.back()));
  }
  CHECK(interpolate(xs, ys) == p);
  CHECK_THROWS_AS(interpolate({1, 1}, {0, 1}), InvalidInput);
}

TEST_CASE("matrix records round trip") {
  const RatMatrix m = RatMatrix::from_rows({{Rational(1, 2), 0}, {-3, Rational(7, 9)}});
  std::stringstream ss;
  write_matrix(ss, m);
  CHECK(read_matrix(ss) == m);
}
