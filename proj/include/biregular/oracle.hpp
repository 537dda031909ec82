#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "biregular/matrix.hpp"
#include "biregular/poly.hpp"

namespace biregular {

// Default number of matrix-expectation terms an enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

// det(xI - M) by the division-free Berkowitz recurrence, for integer M given
// row-major. Independent of the elimination-based charpoly.
std::vector<Integer> berkowitz_charpoly(const std::vector<Integer>& m, int size);

// Average over all (P, S) in S_m x S_n of chi(offdiag(A + P B S^T)).
// Degree m + n. Throws CapExceeded past m! n! > cap.
RatPoly expected_bipartite_charpoly_bruteforce(const RatMatrix& a, const RatMatrix& b);

// Average over all signed permutations Q (m x m), R (n x n) of
// gram_charpoly(A + Q B R^T). Throws CapExceeded past 2^m m! 2^n n! > cap.
RatPoly expected_gram_charpoly_signed(const RatMatrix& a, const RatMatrix& b);

// Average over (P, S) in S_{kl} x S_l of chi(offdiag(A + (P + I) C_l (S + I)^T)),
// with A's free block in its first kl rows and l columns. Degree kn + n.
RatPoly partial_matching_bruteforce(const RatMatrix& a, int k, int l, int t);

// x^(m-n) S(g) -> g; throws InvalidInput if the input is not of that shape.
RatPoly gram_from_bipartite(const RatPoly& full, int m, int n);

// Orthonormal r-frames in R^s: Householder QR of a standard Gaussian s x r
// matrix, columns flipped so that R has a positive diagonal.
class StiefelSampler {
 public:
  StiefelSampler(int s, int r, std::uint64_t seed);
  Eigen::MatrixXd next();

 private:
  int s_;
  int r_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

Eigen::MatrixXd stiefel_sample(int s, int r, std::uint64_t seed);

enum class EnsembleKind { Permutation, SignedPermutation, StandardRepresentation, StiefelMC };

struct PermEnsemble {
  EnsembleKind kind = EnsembleKind::SignedPermutation;
  int dim = 1;
  std::optional<int> frame_cols;
  std::optional<long> trials;
  std::optional<std::uint64_t> seed;
};

std::string to_string(EnsembleKind kind);

struct MinorOrthViolation {
  IndexSet s, t, u, v;
  std::string expected;
  std::string observed;
  double sigma = 0;  // standard error of the mean, Monte Carlo only
};

struct MinorOrthReport {
  bool pass = true;
  bool exact = false;          // rational comparison, no tolerance
  std::size_t quadruples = 0;  // (S, T, U, V) checked
  std::size_t samples = 0;     // ensemble members visited
  double max_abs_error = 0;
  double max_z = 0;            // largest |observed - expected| / sigma
  double max_z_diagonal = 0;   // same, over S = U, T = V only
  std::size_t beyond_limit = 0;  // entries with z above the per-entry limit
  double family_z_limit = 0;   // per-entry limit after Bonferroni correction
  std::vector<MinorOrthViolation> violations;
};

// E [Q]_{S,T} [Q]_{U,V} = 1{S=U} 1{T=V} / binom(dim, i) over every S, U of
// size i in [dim] and T, V of size i in [frame_cols]. Enumeration kinds are
// exact (signed and plain permutations in rationals, the standard
// representation in doubles to 1e-12). Stiefel frames pass when every
// diagonal entry is within `z_limit` standard errors and every entry is
// within the Bonferroni-corrected limit for the whole family at the same
// two-sided level; entries beyond the raw `z_limit` are counted either way.
MinorOrthReport minor_orthogonality_check(const PermEnsemble& ens, int i, double z_limit = 3.0);

// z with two-sided normal tail erfc(z / sqrt 2) equal to that of `z_limit`
// divided by `family`.
double bonferroni_z(double z_limit, std::size_t family);

}  // namespace biregular
