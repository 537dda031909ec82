#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "biregular/errors.hpp"
#include "biregular/oracle.hpp"
#include "biregular/rect_conv.hpp"
#include "support.hpp"

using namespace biregular;

namespace {

RatMatrix offdiag(const RatMatrix& a) { return bipartite_embed(a); }

struct CapGuard {
  std::uint64_t saved = enumeration_cap();
  ~CapGuard() { set_enumeration_cap(saved); }
};

}  // namespace

TEST_CASE("Berkowitz charpoly") {
  const auto c = berkowitz_charpoly({2, 1, 1, 2}, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == 1);
  CHECK(c[1] == -4);
  CHECK(c[2] == 3);
  CHECK_THROWS_AS(berkowitz_charpoly({1, 2, 3}, 2), InvalidInput);
}

TEST_CASE("bipartite brute force") {
  testing::Gen g(51);
  const RatMatrix a = g.int_matrix(3, 2, -2, 2);
  CHECK(expected_bipartite_charpoly_bruteforce(a, RatMatrix(3, 2)) == charpoly(offdiag(a)));

  // two 2-claw matchings on 4 + 2 vertices, 4! 2! = 48 terms
  const RatMatrix c = claw_matrix(2, 2);
  const RatPoly full = expected_bipartite_charpoly_bruteforce(c, c);
  const RatPoly gram = gram_from_bipartite(full, 4, 2);
  CHECK(gram == RatPoly::from_roots({8, 4}));
  // E ||A + P B S^T||_F^2 = 4 + 4 + 2 E<A, P B S^T> = 12; the bipartite spectrum counts it twice
  CHECK(-gram.coeff(1) == 12);
  CHECK(-full.coeff(4) == 12);

  // quadrature: x^(m-n) (x^2 - (a+b)^2) S(p [+]_{m-1,n-1} q)
  const RatPoly p = divide_out_root(gram_charpoly(c), 2);
  const RatPoly conv = rect_conv(p, p, ConvDims{3, 1});
  CHECK(full == RatPoly::monomial(2) * RatPoly({-8, 0, 1}) * s_transform(conv));
  CHECK_THROWS_AS(expected_bipartite_charpoly_bruteforce(a, RatMatrix(2, 3)), InvalidInput);
}

TEST_CASE("signed-permutation brute force") {
  testing::Gen g(52);
  const RatMatrix a = g.int_matrix(3, 2, -2, 2);
  CHECK(expected_gram_charpoly_signed(a, RatMatrix(3, 2)) == gram_charpoly(a));
  const RatMatrix i2 = RatMatrix::identity(2);
  CHECK(expected_gram_charpoly_signed(i2, i2) == RatPoly::from_roots({1, 3}));
  for (int iter = 0; iter < 3; ++iter) {
    const RatMatrix x = g.int_matrix(3, 2, -3, 3), y = g.int_matrix(3, 2, -3, 3);
    CHECK(expected_gram_charpoly_signed(x, y) == rect_conv(gram_charpoly(x), gram_charpoly(y), ConvDims{3, 2}));
  }
}

TEST_CASE("enumeration cap") {
  CapGuard guard;
  set_enumeration_cap(47);
  const RatMatrix c = claw_matrix(2, 2);
  CHECK_THROWS_AS(expected_bipartite_charpoly_bruteforce(c, c), CapExceeded);
  set_enumeration_cap(48);
  CHECK_NOTHROW(expected_bipartite_charpoly_bruteforce(c, c));
  CHECK_THROWS_AS(set_enumeration_cap(0), InvalidInput);
}

TEST_CASE("partial matching brute force") {
  testing::Gen g(53);
  // nothing left to place
  const RatMatrix a = g.int_matrix(6, 3, 0, 1);
  CHECK(partial_matching_bruteforce(a, 2, 0, 3) == charpoly(offdiag(a)));
  // a whole random matching on an empty graph
  const RatMatrix zero(6, 3);
  CHECK(partial_matching_bruteforce(zero, 2, 3, 0) ==
        expected_bipartite_charpoly_bruteforce(zero, claw_matrix(3, 2)));
  CHECK(partial_matching_bruteforce(zero, 2, 3, 0).degree() == 9);
  CHECK_THROWS_AS(partial_matching_bruteforce(RatMatrix(5, 3), 2, 1, 2), InvalidInput);
}

TEST_CASE("gram from bipartite") {
  const RatPoly g = RatPoly::from_roots({1, 4});
  CHECK(gram_from_bipartite(RatPoly::monomial(1) * s_transform(g), 3, 2) == g);
  CHECK_THROWS_AS(gram_from_bipartite(RatPoly::from_roots({1, 2, 3}), 2, 1), InvalidInput);
}

TEST_CASE("Stiefel sampler") {
  StiefelSampler square(4, 4, 3);
  for (int it = 0; it < 20; ++it) {
    const Eigen::MatrixXd q = square.next();
    CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  }
  StiefelSampler frame(5, 2, 4);
  for (int it = 0; it < 20; ++it) {
    const Eigen::MatrixXd f = frame.next();
    for (int c = 0; c < 2; ++c) CHECK(std::abs(f.col(c).norm() - 1) < 1e-12);
    CHECK(std::abs(f.col(0).dot(f.col(1))) < 1e-12);
  }
  CHECK(stiefel_sample(3, 2, 9).isApprox(StiefelSampler(3, 2, 9).next()));
  CHECK_THROWS_AS(StiefelSampler(2, 3, 0), InvalidInput);
}

TEST_CASE("Stiefel first coordinate second moment") {
  const int s = 5;
  const long trials = 100000;
  StiefelSampler sampler(s, 2, 5);
  double sum = 0, sum_sq = 0;
  for (long it = 0; it < trials; ++it) {
    const double v = sampler.next()(0, 0);
    sum += v * v;
    sum_sq += v * v * v * v;
  }
  const double mean = sum / trials;
  const double sigma = std::sqrt((sum_sq / trials - mean * mean) / trials);
  CHECK(std::abs(mean - 1.0 / s) <= 3 * sigma);
}

TEST_CASE("minor orthogonality of signed permutations") {
  PermEnsemble ens;
  ens.kind = EnsembleKind::SignedPermutation;
  ens.dim = 3;
  MinorOrthReport rep = minor_orthogonality_check(ens, 1);
  CHECK(rep.pass);
  CHECK(rep.exact);
  CHECK(rep.samples == 48);
  ens.dim = 4;
  rep = minor_orthogonality_check(ens, 2);
  CHECK(rep.pass);
  CHECK(rep.samples == 384);
  CHECK(rep.max_abs_error == 0);
}

TEST_CASE("plain permutations fail minor orthogonality with a report") {
  PermEnsemble ens;
  ens.kind = EnsembleKind::Permutation;
  ens.dim = 3;
  const MinorOrthReport rep = minor_orthogonality_check(ens, 1);
  CHECK_FALSE(rep.pass);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.violations.front().s.size() == 1);
  // any 1 x 1 pair on distinct rows and columns has E P_ij P_kl = 1/6
  CHECK(rep.max_abs_error == doctest::Approx(1.0 / 6));
}

TEST_CASE("minor orthogonality of the standard representation") {
  PermEnsemble ens;
  ens.kind = EnsembleKind::StandardRepresentation;
  for (int dim = 1; dim <= 3; ++dim) {
    ens.dim = dim;
    for (int i = 0; i <= dim; ++i) CHECK(minor_orthogonality_check(ens, i).pass);
  }
}

TEST_CASE("Monte Carlo minor orthogonality of Stiefel frames") {
  PermEnsemble ens;
  ens.kind = EnsembleKind::StiefelMC;
  ens.dim = 4;
  ens.frame_cols = 2;
  ens.trials = 20000;
  ens.seed = 1;
  const MinorOrthReport rep = minor_orthogonality_check(ens, 1);
  CHECK(rep.pass);
  CHECK_FALSE(rep.exact);
  CHECK(rep.max_z_diagonal <= 3.0);
  CHECK(rep.family_z_limit > 3.0);
  CHECK(rep.samples == 20000);
  ens.seed.reset();
  CHECK_THROWS_AS(minor_orthogonality_check(ens, 1), InvalidInput);
}

TEST_CASE("Bonferroni limit") {
  CHECK(bonferroni_z(3.0, 1) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(bonferroni_z(3.0, 465) == doctest::Approx(4.533).epsilon(1e-3));
  CHECK(bonferroni_z(3.0, 10) > 3.0);
}
