#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "biregular/builder.hpp"
#include "biregular/errors.hpp"
#include "biregular/graph.hpp"
#include "biregular/rect_conv.hpp"
#include "biregular/verify.hpp"
#include "support.hpp"

using namespace biregular;

namespace {

BigraphAdjacency from_matchings(int n, int k, const std::vector<ClawMatching>& ms) {
  BuildState s = BuildState::empty(n, k, static_cast<int>(ms.size()));
  s.completed = ms;
  return s.adjacency();
}

// second largest singular value from the exact gram polynomial
double lambda2_exact(const BigraphAdjacency& g) {
  const RatPoly gram = gram_charpoly(g.to_matrix());
  const RatPoly rest = divide_out_root(gram, g.d() * g.d() * g.k());
  if (rest.degree() < 1) return 0;
  return std::sqrt(std::max(0.0, max_root(rest).mid()));
}

}  // namespace

TEST_CASE("biregularity") {
  const BigraphAdjacency one = from_matchings(3, 2, {canonical_matching(3, 2)});
  CHECK(check_biregular(one, 3, 2, 1));
  CHECK_FALSE(check_biregular(one, 3, 2, 2));
  const ConstructResult r = construct(3, 2, 2);
  CHECK(check_biregular(r.graph, 3, 2, 2));
  // move one edge
  BigraphAdjacency moved = r.graph;
  int left = 0;
  while (moved.at(left, 0) == 0) ++left;
  moved.at(left, 0) -= 1;
  moved.at(left, 1) += 1;
  CHECK_FALSE(check_biregular(moved, 3, 2, 2));
}

TEST_CASE("numeric second eigenvalue") {
  // complete biregular graph: rank one
  BigraphAdjacency full(2, 2, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) full.at(i, j) = 1;
  CHECK(lambda2_numeric(full) == doctest::Approx(0).epsilon(1e-12));
  // k = 1: union of both perfect matchings of K_{2,2} is the 4-cycle
  const ClawMatching id{Claw{1, {1}}, Claw{2, {2}}}, swap{Claw{1, {2}}, Claw{2, {1}}};
  CHECK(std::abs(lambda2_numeric(from_matchings(2, 1, {id, swap}))) < 1e-12);
  // the same matching twice: spectrum {+-2, +-2}
  CHECK(lambda2_numeric(from_matchings(2, 1, {id, id})) == doctest::Approx(2.0).epsilon(1e-12));
  const ConstructResult r = construct(3, 2, 3);
  CHECK(lambda2_numeric(r.graph) <= 3.65028153987288 + 1e-9);
  CHECK(lambda2_numeric(r.graph) == doctest::Approx(lambda2_exact(r.graph)).epsilon(1e-9));
}

TEST_CASE("certificate of constructed graphs") {
  for (const auto& [n, k, d] : {std::tuple{2, 2, 2}, std::tuple{3, 2, 3}, std::tuple{3, 3, 2}}) {
    const ConstructResult r = construct(n, k, d);
    const SpectralCertificate cert = certify_ramanujan(r.graph, n, k, d);
    CHECK(cert.valid());
    CHECK(cert.roots_above_bound == 0);
    CHECK(cert.gram_poly.degree() == n - 1);
    CHECK(cert.bound_enclosure.overlaps(ramanujan_bound_squared(k, d)));
    REQUIRE(cert.max_root);
    CHECK(cert.max_root->hi <= cert.bound_enclosure.hi());
  }
}

TEST_CASE("a single matching is rejected") {
  // d = 1: gram (x - k)^(n-1) against bound (sqrt(k-1))^2 = k - 1
  for (const auto& [n, k] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{3, 1}}) {
    const SpectralCertificate cert = certify_ramanujan(from_matchings(n, k, {canonical_matching(n, k)}), n, k, 1);
    CHECK_FALSE(cert.valid());
    CHECK(cert.gram_poly == RatPoly::linear_power(k, n - 1));
    CHECK(cert.roots_above_bound == 1);
  }
}

TEST_CASE("a nontrivial root equal to the bound counts as within it") {
  // k = 1, d = 2: the doubled matching has lambda_2 = 2 = 2 sqrt(d - 1) exactly
  const ClawMatching id{Claw{1, {1}}, Claw{2, {2}}};
  const SpectralCertificate cert = certify_ramanujan(from_matchings(2, 1, {id, id}), 2, 1, 2);
  CHECK(cert.valid());
  CHECK(cert.root_equals_bound);
}

TEST_CASE("certificate errors and output") {
  const BigraphAdjacency one = from_matchings(3, 2, {canonical_matching(3, 2)});
  CHECK_THROWS_AS(certify_ramanujan(one, 3, 2, 2), StructuralError);
  const ConstructResult r = construct(2, 2, 2);
  std::ostringstream os;
  write_certificate(os, certify_ramanujan(r.graph, 2, 2, 2));
  const std::string text = os.str();
  for (const char* key : {"n: 2", "k: 2", "d: 2", "bound_squared_lo:", "bound_squared_hi:", "gram_poly: 1 ",
                          "roots_above_bound: 0", "root_equals_bound: false", "precision_bits:", "valid: true"})
    CHECK_MESSAGE(text.find(key) != std::string::npos, key);
}

TEST_CASE("graph records") {
  const ConstructResult r = construct(3, 2, 3);
  std::stringstream ss;
  write_graph(ss, r.graph);
  const std::string text = ss.str();
  CHECK(text.rfind("3 2 3\n", 0) == 0);
  CHECK(read_graph(ss) == r.graph);
  std::istringstream bad("2 2 2\n5 1 1\n");
  CHECK_THROWS_AS(read_graph(bad), InvalidInput);
  std::istringstream unsorted("2 2 2\n2 1 1\n1 1 1\n");
  CHECK_THROWS_AS(read_graph(unsorted), InvalidInput);
}
