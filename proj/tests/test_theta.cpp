#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "biregular/builder.hpp"
#include "biregular/errors.hpp"
#include "biregular/oracle.hpp"
#include "biregular/theta.hpp"
#include "support.hpp"

using namespace biregular;

namespace {

int count_at_most(const IndexSet& s, int bound) {
  int c = 0;
  for (int x : s) c += x <= bound ? 1 : 0;
  return c;
}

// Squared minors of every size, bucketed by how many rows fall in [s] and
// columns in [r].
ThetaTable theta_by_minors(const RatMatrix& a, int s, int r) {
  const int n = a.cols();
  ThetaTable tab(n, s, r);
  for (int j = 0; j <= n; ++j)
    for (const auto& x : IndexSet::subsets(a.rows(), j))
      for (const auto& y : IndexSet::subsets(n, j)) {
        const Rational mnr = minor(a, x, y);
        tab.at(j, count_at_most(x, s), count_at_most(y, r)) += mnr * mnr;
      }
  return tab;
}

}  // namespace

TEST_CASE("theta of the zero matrix") {
  const ThetaTable t = theta(RatMatrix(4, 3), 2, 1);
  for (int j = 0; j <= 3; ++j)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 1; ++q) CHECK(t.at(j, p, q) == (j == 0 && p == 0 && q == 0 ? 1 : 0));
}

TEST_CASE("theta with every row and column weighted is diagonal in (p, q)") {
  testing::Gen g(41);
  const RatMatrix a = g.int_matrix(4, 3, -3, 3);
  const ThetaTable t = theta(a, 4, 3);
  const RatPoly plus = charpoly_plus(a.transpose() * a);
  for (int j = 0; j <= 3; ++j)
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 3; ++q) {
        if (p == j && q == j) CHECK(t.at(j, p, q) == plus.coeff(3 - j));
        else CHECK(t.at(j, p, q) == 0);
      }
  CHECK(t.unit_slice() == plus);
}

TEST_CASE("property: theta equals the squared-minor expansion") {
  testing::Gen g(42);
  for (int iter = 0; iter < 8; ++iter) {
    const int rows = g.uniform(2, 5), cols = g.uniform(1, std::min(rows, 3));
    const RatMatrix a = g.int_matrix(rows, cols, -3, 3);
    const int s = g.uniform(0, rows), r = g.uniform(0, cols);
    CHECK(theta(a, s, r) == theta_by_minors(a, s, r));
  }
  // the documented instance: 4 x 3, s = r = 2
  const RatMatrix a = g.int_matrix(4, 3, -4, 4);
  CHECK(theta(a, 2, 2) == theta_by_minors(a, 2, 2));
}

TEST_CASE("theta_hat unit slice is det(xI + A+^T A+)") {
  BuildState s = BuildState::empty(3, 2, 2);
  s.completed.push_back(canonical_matching(3, 2));
  s = s.apply(enumerate_candidates(s).front());
  const RatMatrix ap = assemble_A_plus(s);
  const ThetaTable t = theta_hat(ap, s.k, s.l(), s.t());
  CHECK(t.unit_slice() == charpoly_plus(ap.transpose() * ap));
  CHECK(t.s() == s.k * s.l() - 1);
  CHECK(t.r() == s.l() - 1);
}

TEST_CASE("theta_hat with one free right vertex has no z block") {
  BuildState s = BuildState::empty(2, 3, 2);
  s.completed.push_back(canonical_matching(2, 3));
  s = s.apply(enumerate_candidates(s).front());
  REQUIRE(s.l() == 1);
  const ThetaTable t = theta_hat(assemble_A_plus(s), s.k, s.l(), s.t());
  CHECK(t.s() == s.k - 1);
  CHECK(t.r() == 0);
}

TEST_CASE("expected completion") {
  testing::Gen g(43);
  const RatMatrix a = g.int_matrix(4, 3, -2, 2);
  const ThetaTable t = theta(a, 3, 2);
  // k = 0 adds nothing
  CHECK(expected_completion(t, FrameDims{4, 3, 3, 2}, 0) == charpoly_plus(a.transpose() * a));
  // A = 0, r = s = n: a scaled orthogonal matrix in the corner
  const ThetaTable z = theta(RatMatrix(4, 3), 3, 3);
  CHECK(expected_completion(z, FrameDims{4, 3, 3, 3}, 2) == RatPoly::linear_power(-2, 3));
  // r < n leaves x^(n - r)
  const ThetaTable z2 = theta(RatMatrix(4, 3), 3, 2);
  CHECK(expected_completion(z2, FrameDims{4, 3, 3, 2}, 5) == RatPoly::linear_power(-5, 2) * RatPoly::monomial(1));
  CHECK_THROWS_AS(expected_completion(t, FrameDims{4, 3, 2, 2}, 1), InvalidInput);
  CHECK_THROWS_AS(validate(FrameDims{2, 3, 2, 2}), InvalidInput);
}

TEST_CASE("expected completion against a Monte Carlo frame average") {
  // M = A + sqrt(k) [F 0; 0 0], F uniform on 3 x 2 frames
  testing::Gen g(44);
  const int m = 4, n = 3, s = 3, r = 2;
  const int k = 2;
  const RatMatrix a = g.int_matrix(m, n, -2, 2);
  const RatPoly exact = expected_completion(theta(a, s, r), FrameDims{m, n, s, r}, k);

  const long trials = 100000;
  StiefelSampler sampler(s, r, 7);
  const Eigen::MatrixXd base = testing::to_eigen(a);
  std::vector<double> sum(n + 1, 0.0), sum_sq(n + 1, 0.0);
  for (long it = 0; it < trials; ++it) {
    Eigen::MatrixXd mm = base;
    mm.topLeftCorner(s, r) += std::sqrt(double(k)) * sampler.next();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mm.transpose() * mm, Eigen::EigenvaluesOnly);
    const auto c = testing::plus_poly_from_eigenvalues(es.eigenvalues());
    for (int i = 0; i <= n; ++i) {
      sum[i] += c[i];
      sum_sq[i] += c[i] * c[i];
    }
  }
  for (int i = 0; i < n; ++i) {
    const double mean = sum[i] / trials;
    const double sigma = std::sqrt(std::max(0.0, sum_sq[i] / trials - mean * mean) / trials);
    INFO("coefficient " << i << " exact " << exact.coeff(i).get_d() << " mean " << mean << " sigma " << sigma);
    CHECK(std::abs(mean - exact.coeff(i).get_d()) <= 3 * sigma);
  }
  CHECK(exact.coeff(n) == 1);
}

TEST_CASE("gram polynomial from a completion") {
  CHECK(gram_poly_from_completion(RatPoly::linear_power(-2, 3)) == RatPoly::linear_power(2, 3));
  CHECK(gram_poly_from_completion(RatPoly::monomial(4)) == RatPoly::monomial(4));
}

TEST_CASE("pipeline reproduces brute force on the golden instance") {
  BuildState s = BuildState::empty(3, 2, 2);
  s.completed.push_back(canonical_matching(3, 2));
  const auto cands = enumerate_candidates(s);
  REQUIRE(cands.size() == 15);
  for (std::size_t i = 0; i < cands.size(); i += 4) {
    const BuildState child = s.apply(cands[i]);
    const RatPoly brute = gram_from_bipartite(
        partial_matching_bruteforce(arranged_adjacency(child), child.k, child.l(), child.t()), 6, 3);
    CHECK(expected_gram_theta(child) == brute);
  }
}

TEST_CASE("theta records round trip") {
  testing::Gen g(45);
  const ThetaTable t = theta(g.int_matrix(4, 3, -3, 3), 2, 1);
  std::stringstream ss;
  write_theta(ss, t);
  CHECK(read_theta(ss) == t);
}
