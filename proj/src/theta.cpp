#include "biregular/theta.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

#include "biregular/errors.hpp"
#include "biregular/parallel.hpp"

namespace biregular {

ThetaTable::ThetaTable(int n, int s, int r) : n_(n), s_(s), r_(r) {
  if (n < 0 || s < 0 || r < 0) throw InvalidInput("theta table dimensions must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(s + 1) * static_cast<std::size_t>(r + 1),
                 Rational(0));
}

std::size_t ThetaTable::index(int j, int p, int q) const {
  if (j < 0 || j > n_ || p < 0 || p > s_ || q < 0 || q > r_) {
    throw InvalidInput("theta index (" + std::to_string(j) + "," + std::to_string(p) + "," + std::to_string(q) +
                       ") out of range");
  }
  return (static_cast<std::size_t>(j) * static_cast<std::size_t>(s_ + 1) + static_cast<std::size_t>(p)) *
             static_cast<std::size_t>(r_ + 1) +
         static_cast<std::size_t>(q);
}

RatPoly ThetaTable::unit_slice() const {
  std::vector<Rational> c(static_cast<std::size_t>(n_) + 1);
  for (int j = 0; j <= n_; ++j) {
    Rational sum = 0;
    for (int p = 0; p <= s_; ++p)
      for (int q = 0; q <= r_; ++q) sum += at(j, p, q);
    c[static_cast<std::size_t>(n_ - j)] = sum;
  }
  return RatPoly(std::move(c));
}

void validate(const FrameDims& d) {
  if (d.r < 0 || d.s < d.r || d.m < d.s || d.n < d.r || d.m < d.n) {
    throw InvalidInput("frame dimensions need m >= s >= r >= 0, n >= r, m >= n; got m=" + std::to_string(d.m) +
                       " n=" + std::to_string(d.n) + " s=" + std::to_string(d.s) + " r=" + std::to_string(d.r));
  }
}

namespace {

// e_j for j = 0..n, where det(xI + M) = sum_j x^(n-j) e_j
using Evaluator = std::function<RatMatrix(const Rational& y2, const Rational& z2)>;

ThetaTable interpolate_table(int n, int s, int r, const Evaluator& gram_at) {
  // y^2 and z^2 degrees are bounded by the minor size j <= n as well
  const int dy = std::min(s, n), dz = std::min(r, n);
  const std::size_t ny = static_cast<std::size_t>(dy) + 1, nz = static_cast<std::size_t>(dz) + 1;

  std::vector<Rational> y_nodes, z_nodes;
  for (int a = 1; a <= dy + 1; ++a) y_nodes.emplace_back(a);
  for (int b = 1; b <= dz + 1; ++b) z_nodes.emplace_back(b);

  const auto samples = parallel_map(ny * nz, [&](std::size_t idx) {
    const RatPoly cp = charpoly_plus(gram_at(y_nodes[idx / nz], z_nodes[idx % nz]));
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) e[static_cast<std::size_t>(j)] = cp.coeff(n - j);
    return e;
  });

  ThetaTable tab(n, s, r);
  for (int j = 0; j <= n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    // per y node: polynomial in z^2
    std::vector<RatPoly> in_z(ny);
    for (std::size_t a = 0; a < ny; ++a) {
      std::vector<Rational> vals(nz);
      for (std::size_t b = 0; b < nz; ++b) vals[b] = samples[a * nz + b][uj];
      in_z[a] = interpolate(z_nodes, vals);
    }
    for (int q = 0; q <= dz; ++q) {
      std::vector<Rational> vals(ny);
      for (std::size_t a = 0; a < ny; ++a) vals[a] = in_z[a].coeff(q);
      const RatPoly in_y = interpolate(y_nodes, vals);
      for (int p = 0; p <= dy; ++p) tab.at(j, p, q) = in_y.coeff(p);
    }
  }
  return tab;
}

// y2 I_b + (1 - y2)/b J_b on the leading b x b block, identity elsewhere
RatMatrix averaging_weight(int size, int b, const Rational& y2) {
  RatMatrix w = RatMatrix::identity(size);
  if (b == 0) return w;
  const Rational off = (1 - y2) / b;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) w(i, j) = (i == j ? y2 : Rational(0)) + off;
  return w;
}

RatMatrix diagonal_weight(int size, int b, const Rational& y2) {
  RatMatrix w = RatMatrix::identity(size);
  for (int i = 0; i < b; ++i) w(i, i) = y2;
  return w;
}

}  // namespace

ThetaTable theta(const RatMatrix& a, int s, int r) {
  if (s < 0 || r < 0 || s > a.rows() || r > a.cols()) {
    throw InvalidInput("theta needs 0 <= s <= rows and 0 <= r <= cols");
  }
  const RatMatrix at = a.transpose();
  return interpolate_table(a.cols(), s, r, [&](const Rational& y2, const Rational& z2) {
    return at * diagonal_weight(a.rows(), s, y2) * a * diagonal_weight(a.cols(), r, z2);
  });
}

ThetaTable theta_hat(const RatMatrix& a_plus, int k, int l, int t) {
  if (k < 1 || l < 1 || t < 0) throw InvalidInput("theta_hat needs k >= 1, l >= 1, t >= 0");
  const int n = l + t;
  if (a_plus.rows() != k * n || a_plus.cols() != n) {
    throw InvalidInput("theta_hat: A+ must be kn x n with n = l + t");
  }
  const RatMatrix at = a_plus.transpose();
  return interpolate_table(n, k * l - 1, l - 1, [&](const Rational& y2, const Rational& z2) {
    return at * averaging_weight(k * n, k * l, y2) * a_plus * averaging_weight(n, l, z2);
  });
}

namespace {

// binom(s-p, e) binom(r-q, e) / binom(s, e), indexed [e][p][q], e = 0..n
struct CompletionWeights {
  int n, s, r;
  std::vector<Rational> w;

  const Rational& at(int e, int p, int q) const {
    return w[(static_cast<std::size_t>(e) * static_cast<std::size_t>(s + 1) + static_cast<std::size_t>(p)) *
                 static_cast<std::size_t>(r + 1) +
             static_cast<std::size_t>(q)];
  }
};

std::shared_ptr<const CompletionWeights> completion_weights(int n, int s, int r) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const CompletionWeights>> cache;
  const auto key = std::make_tuple(n, s, r);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto cw = std::make_shared<CompletionWeights>();
  cw->n = n;
  cw->s = s;
  cw->r = r;
  cw->w.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(s + 1) * static_cast<std::size_t>(r + 1),
               Rational(0));
  for (int e = 0; e <= n; ++e) {
    const Integer base = binomial(s, e);
    if (base == 0) continue;  // e > s: numerator binom(s-p, e) vanishes too
    for (int p = 0; p <= s; ++p)
      for (int q = 0; q <= r; ++q) {
        Rational v(binomial(s - p, e) * binomial(r - q, e), base);
        v.canonicalize();
        cw->w[(static_cast<std::size_t>(e) * static_cast<std::size_t>(s + 1) + static_cast<std::size_t>(p)) *
                  static_cast<std::size_t>(r + 1) +
              static_cast<std::size_t>(q)] = v;
      }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(cw)).first->second;
}

}  // namespace

RatPoly expected_completion(const ThetaTable& tab, const FrameDims& dims, const Rational& k) {
  validate(dims);
  if (tab.n() != dims.n || tab.s() != dims.s || tab.r() != dims.r) {
    throw InvalidInput("expected_completion: table is (" + std::to_string(tab.n()) + "," + std::to_string(tab.s()) +
                       "," + std::to_string(tab.r()) + "), frame dims ask for (" + std::to_string(dims.n) + "," +
                       std::to_string(dims.s) + "," + std::to_string(dims.r) + ")");
  }
  const int n = dims.n, s = dims.s, r = dims.r;
  const auto weights = completion_weights(n, s, r);

  std::vector<Rational> kpow(static_cast<std::size_t>(n) + 1);
  kpow[0] = 1;
  for (int e = 1; e <= n; ++e) kpow[static_cast<std::size_t>(e)] = kpow[static_cast<std::size_t>(e - 1)] * k;

  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Rational c = 0;
    for (int j = 0; j <= i; ++j) {
      const int e = i - j;
      Rational inner = 0;
      for (int p = 0; p <= std::min(s, j); ++p)
        for (int q = 0; q <= std::min(r, j); ++q) {
          const Rational& a = tab.at(j, p, q);
          if (a != 0) inner += weights->at(e, p, q) * a;
        }
      c += kpow[static_cast<std::size_t>(e)] * inner;
    }
    out[static_cast<std::size_t>(n - i)] = c;
  }
  return RatPoly(std::move(out));
}

RatPoly gram_poly_from_completion(const RatPoly& p_plus) {
  RatPoly q = p_plus.reflect();
  if (p_plus.degree() % 2 != 0) q *= Rational(-1);
  return q;
}

void write_theta(std::ostream& os, const ThetaTable& tab) {
  os << tab.n() << ' ' << tab.s() << ' ' << tab.r() << '\n';
  for (int j = 0; j <= tab.n(); ++j)
    for (int p = 0; p <= tab.s(); ++p)
      for (int q = 0; q <= tab.r(); ++q) {
        const Rational& v = tab.at(j, p, q);
        if (v != 0) os << j << ' ' << p << ' ' << q << ' ' << to_fraction_string(v) << '\n';
      }
}

ThetaTable read_theta(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InvalidInput("theta table: missing header");
  std::istringstream header(line);
  int n = 0, s = 0, r = 0;
  if (!(header >> n >> s >> r)) throw InvalidInput("theta table: header must be 'n s r'");
  ThetaTable tab(n, s, r);
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int j = 0, p = 0, q = 0;
    std::string value;
    if (!(ls >> j >> p >> q >> value)) throw InvalidInput("theta table: bad line '" + line + "'");
    tab.at(j, p, q) = parse_rational(value);
  }
  return tab;
}

}  // namespace biregular
