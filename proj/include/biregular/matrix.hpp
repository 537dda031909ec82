#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "biregular/poly.hpp"
#include "biregular/rational.hpp"

namespace biregular {

// Dense row-major matrix of exact rationals. Indexing through operator() is
// 0-based; minor selection goes through 1-based IndexSet.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  RatMatrix(int rows, int cols, std::vector<Rational> entries);
  // Row-wise literal, for tests: RatMatrix::from_rows({{1, 2}, {3, 4}})
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(int n);
  static RatMatrix ones(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(int i, int j) { return entries_[index(i, j)]; }
  const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }

  RatMatrix transpose() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& c);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& c) { return a *= c; }
  friend RatMatrix operator*(const Rational& c, RatMatrix a) { return a *= c; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

// Strictly increasing, 1-based row or column indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> indices);
  explicit IndexSet(std::vector<int> indices);

  // Every k-subset of {1..n} in lexicographic order.
  static std::vector<IndexSet> subsets(int n, int k);
  static IndexSet range(int n);  // {1..n}

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const std::vector<int>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  int max() const { return indices_.empty() ? 0 : indices_.back(); }
  long sum() const;
  // Members of {1..n} not in this set.
  IndexSet complement(int n) const;
  // Number of members <= bound.
  int count_at_most(int bound) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> indices_;
};

// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational determinant(const RatMatrix& m);

// det(xI - M), by evaluating determinants at x = 0..n and interpolating.
RatPoly charpoly(const RatMatrix& m);
// det(xI + M)
RatPoly charpoly_plus(const RatMatrix& m);
// det(xI - A^T A), monic of degree cols(A).
RatPoly gram_charpoly(const RatMatrix& a);

// [[0, A], [A^T, 0]]
RatMatrix bipartite_embed(const RatMatrix& a);
// k stacked copies of I_n: (kn) x n.
RatMatrix claw_matrix(int n, int k);
// kn x n with claw_matrix(l, k) top-left and zeros elsewhere; l + t = n.
RatMatrix claw_block(int l, int t, int k);

// Determinant of rows S, columns T. Empty sets give 1.
Rational minor(const RatMatrix& m, const IndexSet& rows, const IndexSet& cols);
RatMatrix submatrix(const RatMatrix& m, const IndexSet& rows, const IndexSet& cols);

// The following expand determinants over subsets and are meant as test
// oracles; they refuse dimensions above kMaxMinorExpansionDim.
inline constexpr int kMaxMinorExpansionDim = 8;

// sum over |S| = |T| of (-1)^(sum S + sum T) [A]_{S,T} [B]_{~S,~T}
Rational det_sum_expansion(const RatMatrix& a, const RatMatrix& b);
// sum over U of [A]_{S,U} [B]_{U,T}
Rational cauchy_binet(const RatMatrix& a, const RatMatrix& b, const IndexSet& rows, const IndexSet& cols);
// det(xI + M) = sum_k x^(n-k) sum_{|S|=k} [M]_{S,S}
RatPoly charpoly_via_principal_minors(const RatMatrix& m);

// Lagrange interpolation through (xs[i], ys[i]) with distinct nodes.
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// "rows cols" header line, then one line per row of "num/den" entries.
void write_matrix(std::ostream& os, const RatMatrix& m);
RatMatrix read_matrix(std::istream& is);

}  // namespace biregular
