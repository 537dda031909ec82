#pragma once

#include <vector>

#include "biregular/enclosure.hpp"
#include "biregular/poly.hpp"
#include "biregular/rational.hpp"

namespace biregular {

// Row and column dimensions of the matrices whose squared singular values
// the convolved polynomials carry. m >= n >= 0; n = 0 is the degenerate
// convolution of constants.
struct ConvDims {
  int m = 0;
  int n = 0;
};

void validate(const ConvDims& dims);

// Common squared singular value theta, number of summands d and the free
// parameter u of the R(u) bound.
struct BoundParams {
  Rational theta;
  int d = 1;
  ConvDims dims;
  Rational u;
};

enum class RootCheck {
  Auto,     // verify nonnegative roots of the inputs unless NDEBUG
  Skip,     // caller vouches for the inputs (or wants the bilinear extension)
  Enforce,  // always verify
};

// Rectangular additive convolution p [+]_{m,n} q of two degree-n
// polynomials, from the explicit coefficient double sum.
RatPoly rect_conv(const RatPoly& p, const RatPoly& q, ConvDims dims, RootCheck check = RootCheck::Auto);
// p [+] p [+] ... [+] p, d copies.
RatPoly rect_conv_iter(const RatPoly& p, int d, ConvDims dims, RootCheck check = RootCheck::Auto);

// coeff * sqrt(radicand); sums are only formed between equal radicands so
// that the square stays an exact rational.
struct ScaledSqrt {
  Rational coeff;
  Integer radicand{1};

  Rational squared() const { return coeff * coeff * radicand; }
  friend bool operator==(const ScaledSqrt&, const ScaledSqrt&) = default;
};

ScaledSqrt operator+(const ScaledSqrt& a, const ScaledSqrt& b);

struct UnionGram {
  RatPoly nontrivial;   // p_1 [+]_{m-1,n-1} ... [+]_{m-1,n-1} p_k
  ScaledSqrt trivial;   // sum of the trivial singular values a_i
};

// Expected reduced Gram polynomial of a sum of independently permuted m x n
// matrices with all-ones singular vectors. Each p_i has degree n - 1.
// The full bipartite expectation is x^(m-n) (x^2 - trivial^2) S(nontrivial).
UnionGram expected_union_gram(const std::vector<RatPoly>& polys, const std::vector<ScaledSqrt>& trivial,
                              ConvDims dims);

// (Sp)(SVp) - u (Sp)'(SVp)'
RatPoly q_transform_poly(const RatPoly& p, ConvDims dims, const Rational& u);
// Bracket on the largest root of q_transform_poly.
RootBracket q_transform(const RatPoly& p, ConvDims dims, const Rational& u,
                        const Rational& tol = default_root_tolerance());

inline constexpr unsigned kDefaultPrecisionBits = 128;

// (d sqrt(theta + m^2 u^2) - d m u + (m + n) u)^2 - (m - n)^2 u^2
Enclosure r_bound(const BoundParams& bp, unsigned bits = kDefaultPrecisionBits);
// Minimiser of r_bound over u; requires theta >= 2, d >= 2.
Enclosure u_star(const Rational& theta, int m, int n, int d, unsigned bits = kDefaultPrecisionBits);
// sqrt(theta n / m) (sqrt(d - 1) + sqrt(d m / n - 1)); requires theta >= 2.
Enclosure cor_ok_bound(const Rational& theta, int m, int n, int d, unsigned bits = kDefaultPrecisionBits);
// sqrt(d - 1) + sqrt(k d - 1)
Enclosure ramanujan_bound(int k, int d, unsigned bits = kDefaultPrecisionBits);
// (sqrt(d - 1) + sqrt(k d - 1))^2 = (d - 1) + (k d - 1) + 2 sqrt((d - 1)(k d - 1))
Enclosure ramanujan_bound_squared(int k, int d, unsigned bits = kDefaultPrecisionBits);
// Degree-2 polynomial with ramanujan_bound_squared as its larger root.
RatPoly ramanujan_bound_squared_minpoly(int k, int d);

// Bound on the largest root of the reduced (m - 1, n - 1) convolution with
// m = k n: sqrt(d - 1) sqrt(1 - x) + sqrt(d k - 1 + x), x = (m - n) / (n (m - 1)).
Enclosure shifted_ramanujan_bound(int k, int d, int n, unsigned bits = kDefaultPrecisionBits);
// shifted_ramanujan_bound(k, d, n) <= ramanujan_bound(k, d), decided by
// refining both enclosures; requires d >= 2.
bool better_than_ramanujan_check(int k, int d, int n, unsigned bits = kDefaultPrecisionBits);

}  // namespace biregular
