#include "biregular/matrix.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "biregular/errors.hpp"
#include "biregular/parallel.hpp"

namespace biregular {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0)) {
  if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
}

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw InvalidInput("matrix entry count does not match " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  std::vector<Rational> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw InvalidInput("ragged matrix literal");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RatMatrix(r, c, std::move(entries));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::ones(int rows, int cols) {
  return RatMatrix(rows, cols, std::vector<Rational>(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(1)));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix difference shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int l = 0; l < a.cols_; ++l) {
      const Rational& ail = a(i, l);
      if (ail == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += ail * b(l, j);
    }
  }
  return out;
}

IndexSet::IndexSet(std::initializer_list<int> indices) : IndexSet(std::vector<int>(indices)) {}

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || (i > 0 && indices_[i] <= indices_[i - 1])) {
      throw InvalidInput("index sets must be strictly increasing and 1-based");
    }
  }
}

std::vector<IndexSet> IndexSet::subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

IndexSet IndexSet::range(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return IndexSet(std::move(v));
}

long IndexSet::sum() const { return std::accumulate(indices_.begin(), indices_.end(), 0L); }

IndexSet IndexSet::complement(int n) const {
  std::vector<int> out;
  std::size_t j = 0;
  for (int i = 1; i <= n; ++i) {
    if (j < indices_.size() && indices_[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return IndexSet(std::move(out));
}

int IndexSet::count_at_most(int bound) const {
  return static_cast<int>(std::upper_bound(indices_.begin(), indices_.end(), bound) - indices_.begin());
}

namespace {

Integer bareiss(std::vector<Integer> a, int n) {
  if (n == 0) return 1;
  auto at = [&a, n](int i, int j) -> Integer& { return a[static_cast<std::size_t>(i * n + j)]; };
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

void require_square(const RatMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw InvalidInput(std::string(what) + " needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()));
  }
}

void require_small(const RatMatrix& m, const char* what) {
  if (m.rows() > kMaxMinorExpansionDim || m.cols() > kMaxMinorExpansionDim) {
    throw InvalidInput(std::string(what) + " is a subset-enumeration oracle limited to dimension " +
                       std::to_string(kMaxMinorExpansionDim));
  }
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  require_square(m, "determinant");
  const int n = m.rows();
  std::vector<Integer> ints(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  Integer scale = 1;
  for (int i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= row_lcm;
    for (int j = 0; j < n; ++j) {
      ints[static_cast<std::size_t>(i * n + j)] = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    }
  }
  Rational det(bareiss(std::move(ints), n), scale);
  det.canonicalize();
  return det;
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw InvalidInput("interpolation node/value count mismatch");
  const std::size_t n = xs.size();
  // Newton divided differences, in place
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (gap == 0) throw InvalidInput("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  // Horner expansion of the Newton form
  RatPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * RatPoly({-xs[i], Rational(1)}) + RatPoly::constant(dd[i]);
  }
  return result;
}

RatPoly charpoly(const RatMatrix& m) {
  require_square(m, "charpoly");
  const int n = m.rows();
  std::vector<Rational> xs;
  for (int x = 0; x <= n; ++x) xs.emplace_back(x);
  std::vector<Rational> ys = parallel_map(xs.size(), [&](std::size_t idx) {
    RatMatrix shifted = m * Rational(-1);
    for (int i = 0; i < n; ++i) shifted(i, i) += xs[idx];
    return determinant(shifted);
  });
  return interpolate(xs, ys);
}

RatPoly charpoly_plus(const RatMatrix& m) {
  // det(xI + M) = (-1)^n det(-xI - M)
  RatPoly p = charpoly(m).reflect();
  if (m.rows() % 2 == 1) p *= Rational(-1);
  return p;
}

RatPoly gram_charpoly(const RatMatrix& a) { return charpoly(a.transpose() * a); }

RatMatrix bipartite_embed(const RatMatrix& a) {
  const int m = a.rows(), n = a.cols();
  RatMatrix b(m + n, m + n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      b(i, m + j) = a(i, j);
      b(m + j, i) = a(i, j);
    }
  }
  return b;
}

RatMatrix claw_matrix(int n, int k) { return claw_block(n, 0, k); }

RatMatrix claw_block(int l, int t, int k) {
  if (l < 0 || t < 0 || k < 1) throw InvalidInput("claw_block needs l, t >= 0 and k >= 1");
  const int n = l + t;
  RatMatrix c(k * n, n);
  for (int copy = 0; copy < k; ++copy)
    for (int i = 0; i < l; ++i) c(copy * l + i, i) = 1;
  return c;
}

RatMatrix submatrix(const RatMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.max() > m.rows() || cols.max() > m.cols()) throw InvalidInput("minor index out of range");
  RatMatrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  int r = 0;
  for (int i : rows) {
    int c = 0;
    for (int j : cols) sub(r, c++) = m(i - 1, j - 1);
    ++r;
  }
  return sub;
}

Rational minor(const RatMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw InvalidInput("minor needs |S| == |T|");
  return determinant(submatrix(m, rows, cols));
}

Rational det_sum_expansion(const RatMatrix& a, const RatMatrix& b) {
  require_square(a, "det_sum_expansion");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("det_sum_expansion shape mismatch");
  require_small(a, "det_sum_expansion");
  const int n = a.rows();
  Rational total = 0;
  for (int k = 0; k <= n; ++k) {
    const auto sets = IndexSet::subsets(n, k);
    for (const auto& s : sets) {
      const IndexSet sc = s.complement(n);
      for (const auto& t : sets) {
        const Rational term = minor(a, s, t) * minor(b, sc, t.complement(n));
        if ((s.sum() + t.sum()) % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
    }
  }
  return total;
}

Rational cauchy_binet(const RatMatrix& a, const RatMatrix& b, const IndexSet& rows, const IndexSet& cols) {
  if (a.cols() != b.rows()) throw InvalidInput("cauchy_binet inner dimension mismatch");
  if (rows.size() != cols.size()) throw InvalidInput("cauchy_binet needs |S| == |T|");
  require_small(a, "cauchy_binet");
  require_small(b, "cauchy_binet");
  Rational total = 0;
  for (const auto& u : IndexSet::subsets(a.cols(), static_cast<int>(rows.size()))) {
    total += minor(a, rows, u) * minor(b, u, cols);
  }
  return total;
}

RatPoly charpoly_via_principal_minors(const RatMatrix& m) {
  require_square(m, "charpoly_via_principal_minors");
  require_small(m, "charpoly_via_principal_minors");
  const int n = m.rows();
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    Rational e = 0;
    for (const auto& s : IndexSet::subsets(n, k)) e += minor(m, s, s);
    coeffs[static_cast<std::size_t>(n - k)] = e;
  }
  return RatPoly(std::move(coeffs));
}

void write_matrix(std::ostream& os, const RatMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_fraction_string(m(i, j));
    os << '\n';
  }
}

RatMatrix read_matrix(std::istream& is) {
  int rows = 0, cols = 0;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0) throw InvalidInput("matrix record: bad dimension header");
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int i = 0; i < rows * cols; ++i) {
    std::string tok;
    if (!(is >> tok)) throw InvalidInput("matrix record: truncated entries");
    entries.push_back(parse_rational(tok));
  }
  return RatMatrix(rows, cols, std::move(entries));
}

}  // namespace biregular
