#pragma once

#include <iosfwd>
#include <vector>

#include "biregular/matrix.hpp"
#include "biregular/poly.hpp"
#include "biregular/rational.hpp"

namespace biregular {

// Coefficients A^j_{p,q} of
//   theta_A(x, y, z) = sum_{j,p,q} x^(n-j) y^(2p) z^(2q) A^j_{p,q},
// the sum over |X| = |Y| = j of squared minors [A]_{X,Y}^2 with
// |X ∩ [s]| = p and |Y ∩ [r]| = q.
class ThetaTable {
 public:
  ThetaTable() = default;
  ThetaTable(int n, int s, int r);

  int n() const { return n_; }
  int s() const { return s_; }
  int r() const { return r_; }

  Rational& at(int j, int p, int q) { return coeffs_[index(j, p, q)]; }
  const Rational& at(int j, int p, int q) const { return coeffs_[index(j, p, q)]; }

  // sum_{p,q} A^j_{p,q}: the y = z = 1 slice, i.e. det(xI + A^T A).
  RatPoly unit_slice() const;

  friend bool operator==(const ThetaTable&, const ThetaTable&) = default;

 private:
  std::size_t index(int j, int p, int q) const;
  int n_ = 0;
  int s_ = 0;
  int r_ = 0;
  std::vector<Rational> coeffs_;
};

struct FrameDims {
  int m = 0;
  int n = 0;
  int s = 0;
  int r = 0;
};

void validate(const FrameDims& dims);

// theta of diag(y I_s, I) A diag(z I_r, I), by interpolating
// det(xI + A^T W_y A W_z) over (y^2, z^2) nodes.
ThetaTable theta(const RatMatrix& a, int s, int r);

// theta of the basis-changed matrix (U + I) A+ (V + I)^T with s = k l - 1,
// r = l - 1, where U, V diagonalise the correction block. The irrational U, V
// are never formed: the weights become rank-one corrections of identities,
// W_y = (y^2 I_{kl} + (1 - y^2)/(kl) J) + I_{kt}, W_z likewise on l + t.
ThetaTable theta_hat(const RatMatrix& a_plus, int k, int l, int t);

// Expected det(xI + G) after adding sqrt(k) times a uniform r-frame in R^s to
// the top-left block: c_i = sum binom(s-p, i-j) binom(r-q, i-j) / binom(s, i-j)
// k^(i-j) A^j_{p,q}.
RatPoly expected_completion(const ThetaTable& tab, const FrameDims& dims, const Rational& k);

// (-1)^n p(-x): det(xI + G) to det(xI - G).
RatPoly gram_poly_from_completion(const RatPoly& p_plus);

// "n s r" header, then one "j p q num/den" line per nonzero coefficient.
void write_theta(std::ostream& os, const ThetaTable& tab);
ThetaTable read_theta(std::istream& is);

}  // namespace biregular
