#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

#include "biregular/matrix.hpp"
#include "biregular/poly.hpp"
#include "biregular/rational.hpp"

namespace testing {

using biregular::RatMatrix;
using biregular::RatPoly;
using biregular::Rational;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Rational rational(int lo, int hi, int den_max) {
    Rational r(uniform(lo, hi), uniform(1, den_max));
    r.canonicalize();
    return r;
  }
  RatMatrix int_matrix(int rows, int cols, int lo, int hi) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }
  std::vector<Rational> roots(int n, int num_hi, int den_max) {
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i) out.push_back(rational(0, num_hi, den_max));
    return out;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Laplace expansion along the first row.
inline Rational cofactor_det(const RatMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational sum = 0;
  for (int c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    RatMatrix sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, jj = 0; j < n; ++j)
        if (j != c) sub(i - 1, jj++) = m(i, j);
    const Rational term = m(0, c) * cofactor_det(sub);
    sum += (c % 2 == 0) ? term : Rational(-term);
  }
  return sum;
}

inline Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

// Coefficients (low to high) of prod (x + lambda_i): elementary symmetric
// polynomials of the eigenvalues.
inline std::vector<double> plus_poly_from_eigenvalues(const Eigen::VectorXd& ev) {
  std::vector<double> c{1.0};
  for (int i = 0; i < ev.size(); ++i) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j] * ev(i);
      next[j + 1] += c[j];
    }
    c = next;
  }
  return c;
}

inline std::vector<double> to_doubles(const RatPoly& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_d());
  return out;
}

}  // namespace testing
