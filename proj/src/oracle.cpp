#include "biregular/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

#include "biregular/errors.hpp"
#include "biregular/parallel.hpp"

namespace biregular {

namespace {

std::atomic<std::uint64_t>& cap_storage() {
  static std::atomic<std::uint64_t> cap{kDefaultEnumerationCap};
  return cap;
}

void require_within_cap(const Integer& terms, const std::string& what) {
  if (terms > Integer(std::to_string(enumeration_cap()))) {
    throw CapExceeded(what + " needs " + terms.get_str() + " terms, cap is " + std::to_string(enumeration_cap()));
  }
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
};

std::vector<SignedPerm> all_signed_permutations(int n) {
  std::vector<SignedPerm> out;
  for (const auto& p : all_permutations(n)) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      SignedPerm sp{p, std::vector<int>(static_cast<std::size_t>(n), 1)};
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) sp.sign[static_cast<std::size_t>(i)] = -1;
      out.push_back(std::move(sp));
    }
  }
  return out;
}

// Common denominator of every entry.
Integer common_denominator(const std::vector<const RatMatrix*>& ms) {
  Integer l = 1;
  for (const auto* m : ms)
    for (const auto& e : m->entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
  return l;
}

std::vector<Integer> scaled_integers(const RatMatrix& m, const Integer& l) {
  std::vector<Integer> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back(Integer(e.get_num() * (l / e.get_den())));
  return out;
}

// sums[i] / (count l^(step*i)) as the coefficient of x^(N-i)
RatPoly unscale(const std::vector<Integer>& sums, const Integer& count, const Integer& l, int step) {
  const int size = static_cast<int>(sums.size()) - 1;
  std::vector<Rational> coeffs(sums.size());
  Integer power = 1, lstep = 1;
  for (int s = 0; s < step; ++s) lstep *= l;
  for (int i = 0; i <= size; ++i) {
    Rational c(sums[static_cast<std::size_t>(i)], count * power);
    c.canonicalize();
    coeffs[static_cast<std::size_t>(size - i)] = c;
    power *= lstep;
  }
  return RatPoly(std::move(coeffs));
}

void accumulate(std::vector<Integer>& into, const std::vector<Integer>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

// chi of the (rows + cols) bipartite embedding of a rows x cols integer matrix
std::vector<Integer> embedded_charpoly(const std::vector<Integer>& m, int rows, int cols) {
  const int size = rows + cols;
  std::vector<Integer> e(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), Integer(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Integer& v = m[static_cast<std::size_t>(i * cols + j)];
      e[static_cast<std::size_t>(i * size + rows + j)] = v;
      e[static_cast<std::size_t>((rows + j) * size + i)] = v;
    }
  return berkowitz_charpoly(e, size);
}

}  // namespace

std::uint64_t enumeration_cap() { return cap_storage().load(); }

void set_enumeration_cap(std::uint64_t cap) {
  if (cap == 0) throw InvalidInput("enumeration cap must be positive");
  cap_storage() = cap;
}

std::vector<Integer> berkowitz_charpoly(const std::vector<Integer>& a, int size) {
  if (size < 0 || a.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw InvalidInput("berkowitz_charpoly: entry count does not match size");
  }
  auto at = [&](int i, int j) -> const Integer& { return a[static_cast<std::size_t>(i * size + j)]; };
  std::vector<Integer> c{Integer(1)};
  if (size == 0) return c;
  c.push_back(-at(0, 0));
  for (int r = 1; r < size; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^(r-1) S
    std::vector<Integer> col(static_cast<std::size_t>(r) + 2);
    col[0] = 1;
    col[1] = -at(r, r);
    std::vector<Integer> vec(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) vec[static_cast<std::size_t>(i)] = at(i, r);
    for (int p = 0; p < r; ++p) {
      Integer dot = 0;
      for (int j = 0; j < r; ++j) dot += at(r, j) * vec[static_cast<std::size_t>(j)];
      col[static_cast<std::size_t>(p) + 2] = -dot;
      if (p + 1 < r) {
        std::vector<Integer> next(static_cast<std::size_t>(r), Integer(0));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) next[static_cast<std::size_t>(i)] += at(i, j) * vec[static_cast<std::size_t>(j)];
        vec = std::move(next);
      }
    }
    std::vector<Integer> nc(static_cast<std::size_t>(r) + 2, Integer(0));
    for (std::size_t i = 0; i < nc.size(); ++i)
      for (std::size_t j = 0; j <= std::min(i, c.size() - 1); ++j) nc[i] += col[i - j] * c[j];
    c = std::move(nc);
  }
  return c;
}

RatPoly expected_bipartite_charpoly_bruteforce(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("A and B must have the same shape");
  const int m = a.rows(), n = a.cols();
  const Integer count = factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n));
  require_within_cap(count, "bipartite expectation");

  const Integer l = common_denominator({&a, &b});
  const auto ai = scaled_integers(a, l), bi = scaled_integers(b, l);
  const auto pm = all_permutations(m), pn = all_permutations(n);

  const auto partials = parallel_map(pm.size(), [&](std::size_t pi) {
    std::vector<Integer> sum(static_cast<std::size_t>(m + n) + 1, Integer(0));
    std::vector<Integer> mat(ai.size());
    const auto& p = pm[pi];
    for (const auto& s : pn) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
          mat[static_cast<std::size_t>(i * n + j)] =
              ai[static_cast<std::size_t>(i * n + j)] +
              bi[static_cast<std::size_t>(p[static_cast<std::size_t>(i)] * n + s[static_cast<std::size_t>(j)])];
      accumulate(sum, embedded_charpoly(mat, m, n));
    }
    return sum;
  });
  std::vector<Integer> total(static_cast<std::size_t>(m + n) + 1, Integer(0));
  for (const auto& part : partials) accumulate(total, part);
  return unscale(total, count, l, 1);
}

RatPoly expected_gram_charpoly_signed(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("A and B must have the same shape");
  const int m = a.rows(), n = a.cols();
  const Integer count = factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n)) *
                        (Integer(1) << static_cast<unsigned>(m + n));
  require_within_cap(count, "signed-permutation expectation");

  const Integer l = common_denominator({&a, &b});
  const auto ai = scaled_integers(a, l), bi = scaled_integers(b, l);
  const auto qm = all_signed_permutations(m), rn = all_signed_permutations(n);

  const auto partials = parallel_map(qm.size(), [&](std::size_t qi) {
    std::vector<Integer> sum(static_cast<std::size_t>(n) + 1, Integer(0));
    std::vector<Integer> mat(ai.size()), gram(static_cast<std::size_t>(n * n));
    const auto& q = qm[qi];
    for (const auto& r : rn) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
          const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
          const Integer& bij = bi[static_cast<std::size_t>(q.perm[ui] * n + r.perm[uj])];
          mat[static_cast<std::size_t>(i * n + j)] =
              ai[static_cast<std::size_t>(i * n + j)] + (q.sign[ui] * r.sign[uj] > 0 ? bij : Integer(-bij));
        }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          Integer dot = 0;
          for (int i = 0; i < m; ++i) dot += mat[static_cast<std::size_t>(i * n + x)] * mat[static_cast<std::size_t>(i * n + y)];
          gram[static_cast<std::size_t>(x * n + y)] = dot;
        }
      accumulate(sum, berkowitz_charpoly(gram, n));
    }
    return sum;
  });
  std::vector<Integer> total(static_cast<std::size_t>(n) + 1, Integer(0));
  for (const auto& part : partials) accumulate(total, part);
  return unscale(total, count, l, 2);
}

RatPoly partial_matching_bruteforce(const RatMatrix& a, int k, int l, int t) {
  if (k < 1 || l < 0 || t < 0) throw InvalidInput("partial_matching_bruteforce needs k >= 1, l, t >= 0");
  const int n = l + t, m = k * n;
  if (a.rows() != m || a.cols() != n) throw InvalidInput("partial_matching_bruteforce: A must be kn x n");
  const Integer count = factorial(static_cast<unsigned>(k * l)) * factorial(static_cast<unsigned>(l));
  require_within_cap(count, "partial matching expectation");

  const RatMatrix c = claw_block(l, t, k);
  const Integer den = common_denominator({&a});
  const auto ai = scaled_integers(a, den), ci = scaled_integers(c, den);
  const auto pl = all_permutations(k * l), sl = all_permutations(l);

  const auto partials = parallel_map(pl.size(), [&](std::size_t pi) {
    std::vector<Integer> sum(static_cast<std::size_t>(m + n) + 1, Integer(0));
    std::vector<Integer> mat(ai);
    const auto& p = pl[pi];
    for (const auto& s : sl) {
      for (int i = 0; i < k * l; ++i)
        for (int j = 0; j < l; ++j)
          mat[static_cast<std::size_t>(i * n + j)] =
              ai[static_cast<std::size_t>(i * n + j)] +
              ci[static_cast<std::size_t>(p[static_cast<std::size_t>(i)] * n + s[static_cast<std::size_t>(j)])];
      accumulate(sum, embedded_charpoly(mat, m, n));
    }
    return sum;
  });
  std::vector<Integer> total(static_cast<std::size_t>(m + n) + 1, Integer(0));
  for (const auto& part : partials) accumulate(total, part);
  return unscale(total, count, den, 1);
}

RatPoly gram_from_bipartite(const RatPoly& full, int m, int n) {
  if (m < n || n < 0 || full.degree() != m + n) throw InvalidInput("gram_from_bipartite: degree must be m + n");
  for (int i = 0; i < m - n; ++i)
    if (full.coeff(i) != 0) throw InvalidInput("gram_from_bipartite: missing x^(m-n) factor");
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= 2 * n; ++i) {
    const Rational c = full.coeff(m - n + i);
    if (i % 2 == 1) {
      if (c != 0) throw InvalidInput("gram_from_bipartite: odd power present");
    } else {
      g[static_cast<std::size_t>(i / 2)] = c;
    }
  }
  return RatPoly(std::move(g));
}

StiefelSampler::StiefelSampler(int s, int r, std::uint64_t seed) : s_(s), r_(r), rng_(seed) {
  if (r < 0 || s < r) throw InvalidInput("Stiefel frames need s >= r >= 0");
}

Eigen::MatrixXd StiefelSampler::next() {
  Eigen::MatrixXd g(s_, r_);
  for (int j = 0; j < r_; ++j)
    for (int i = 0; i < s_; ++i) g(i, j) = normal_(rng_);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(s_, r_);
  const Eigen::MatrixXd& packed = qr.matrixQR();
  for (int j = 0; j < r_; ++j)
    if (packed(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

Eigen::MatrixXd stiefel_sample(int s, int r, std::uint64_t seed) { return StiefelSampler(s, r, seed).next(); }

double bonferroni_z(double z_limit, std::size_t family) {
  if (family <= 1) return z_limit;
  const double target = std::erfc(z_limit / std::sqrt(2.0)) / static_cast<double>(family);
  double lo = z_limit, hi = 40.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (std::erfc(mid / std::sqrt(2.0)) > target) lo = mid;
    else hi = mid;
  }
  return hi;
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::Permutation:
      return "permutation";
    case EnsembleKind::SignedPermutation:
      return "signed-permutation";
    case EnsembleKind::StandardRepresentation:
      return "standard-representation";
    case EnsembleKind::StiefelMC:
      return "stiefel-mc";
  }
  return "unknown";
}

namespace {

struct MinorIndex {
  std::vector<IndexSet> rows, cols;
  std::size_t size() const { return rows.size() * cols.size(); }
  const IndexSet& row(std::size_t a) const { return rows[a / cols.size()]; }
  const IndexSet& col(std::size_t a) const { return cols[a % cols.size()]; }
};

double minor_double(const Eigen::MatrixXd& q, const IndexSet& rows, const IndexSet& cols) {
  const int i = static_cast<int>(rows.size());
  if (i == 0) return 1.0;
  Eigen::MatrixXd sub(i, i);
  for (int a = 0; a < i; ++a)
    for (int b = 0; b < i; ++b) sub(a, b) = q(rows.indices()[static_cast<std::size_t>(a)] - 1, cols.indices()[static_cast<std::size_t>(b)] - 1);
  return sub.determinant();
}

void record(MinorOrthReport& rep, const MinorIndex& idx, std::size_t a, std::size_t b, std::string expected,
            std::string observed, double sigma) {
  rep.pass = false;
  if (rep.violations.size() < 20) {
    rep.violations.push_back(MinorOrthViolation{idx.row(a), idx.col(a), idx.row(b), idx.col(b), std::move(expected),
                                                std::move(observed), sigma});
  }
}

// Exact check for a finite ensemble of integer matrices.
void exact_check(MinorOrthReport& rep, const MinorIndex& idx, const std::vector<RatMatrix>& members,
                 const Integer& binom_si) {
  const std::size_t np = idx.size();
  std::vector<Integer> sums(np * np, Integer(0));
  for (const auto& q : members) {
    std::vector<Integer> minors(np);
    for (std::size_t a = 0; a < np; ++a) minors[a] = minor(q, idx.row(a), idx.col(a)).get_num();
    for (std::size_t a = 0; a < np; ++a) {
      if (minors[a] == 0) continue;
      for (std::size_t b = a; b < np; ++b) sums[a * np + b] += minors[a] * minors[b];
    }
  }
  rep.samples = members.size();
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a; b < np; ++b) {
      ++rep.quadruples;
      Rational observed(sums[a * np + b], Integer(static_cast<unsigned long>(members.size())));
      observed.canonicalize();
      const Rational expected = a == b ? Rational(Integer(1), binom_si) : Rational(0);
      const double err = std::abs(Rational(observed - expected).get_d());
      rep.max_abs_error = std::max(rep.max_abs_error, err);
      if (observed != expected) record(rep, idx, a, b, to_fraction_string(expected), to_fraction_string(observed), 0);
    }
}

}  // namespace

MinorOrthReport minor_orthogonality_check(const PermEnsemble& ens, int i, double z_limit) {
  const int s = ens.dim;
  const int r = ens.frame_cols.value_or(s);
  if (s < 1 || r < 0 || r > s) throw InvalidInput("ensemble needs dim >= 1 and 0 <= frame_cols <= dim");
  if (i < 0 || i > r) throw InvalidInput("minor size must lie in [0, frame_cols]");

  MinorIndex idx{IndexSet::subsets(s, i), IndexSet::subsets(r, i)};
  const Integer binom_si = binomial(s, i);
  const double expected_diag = 1.0 / binom_si.get_d();
  MinorOrthReport rep;

  switch (ens.kind) {
    case EnsembleKind::Permutation:
    case EnsembleKind::SignedPermutation: {
      const bool signed_kind = ens.kind == EnsembleKind::SignedPermutation;
      Integer count = factorial(static_cast<unsigned>(s));
      if (signed_kind) count *= Integer(1) << static_cast<unsigned>(s);
      require_within_cap(count, to_string(ens.kind) + " ensemble");
      std::vector<RatMatrix> members;
      auto add = [&](const std::vector<int>& perm, const std::vector<int>& sign) {
        RatMatrix q(s, r);
        for (int c = 0; c < r; ++c) q(perm[static_cast<std::size_t>(c)], c) = sign[static_cast<std::size_t>(c)];
        members.push_back(std::move(q));
      };
      if (signed_kind) {
        for (const auto& sp : all_signed_permutations(s)) add(sp.perm, sp.sign);
      } else {
        const std::vector<int> ones(static_cast<std::size_t>(s), 1);
        for (const auto& p : all_permutations(s)) add(p, ones);
      }
      rep.exact = true;
      exact_check(rep, idx, members, binom_si);
      return rep;
    }
    case EnsembleKind::StandardRepresentation: {
      // S_{s+1} acting on the sum-zero hyperplane, Helmert basis
      require_within_cap(factorial(static_cast<unsigned>(s + 1)), "standard representation ensemble");
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(s + 1, s);
      for (int j = 1; j <= s; ++j) {
        const double norm = std::sqrt(static_cast<double>(j) * (j + 1));
        for (int a = 0; a < j; ++a) h(a, j - 1) = 1.0 / norm;
        h(j, j - 1) = -static_cast<double>(j) / norm;
      }
      const std::size_t np = idx.size();
      std::vector<double> sums(np * np, 0.0);
      std::size_t members = 0;
      for (const auto& p : all_permutations(s + 1)) {
        Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(s + 1, s + 1);
        for (int a = 0; a <= s; ++a) perm(p[static_cast<std::size_t>(a)], a) = 1.0;
        const Eigen::MatrixXd q = (h.transpose() * perm * h).leftCols(r);
        std::vector<double> minors(np);
        for (std::size_t a = 0; a < np; ++a) minors[a] = minor_double(q, idx.row(a), idx.col(a));
        for (std::size_t a = 0; a < np; ++a)
          for (std::size_t b = a; b < np; ++b) sums[a * np + b] += minors[a] * minors[b];
        ++members;
      }
      rep.samples = members;
      constexpr double tol = 1e-12;
      for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = a; b < np; ++b) {
          ++rep.quadruples;
          const double observed = sums[a * np + b] / static_cast<double>(members);
          const double expected = a == b ? expected_diag : 0.0;
          const double err = std::abs(observed - expected);
          rep.max_abs_error = std::max(rep.max_abs_error, err);
          if (err > tol) record(rep, idx, a, b, std::to_string(expected), std::to_string(observed), 0);
        }
      return rep;
    }
    case EnsembleKind::StiefelMC: {
      if (!ens.trials || *ens.trials < 2) throw InvalidInput("stiefel-mc needs at least 2 trials");
      if (!ens.seed) throw InvalidInput("stiefel-mc needs an explicit seed");
      const std::size_t np = idx.size();
      std::vector<double> sums(np * np, 0.0), squares(np * np, 0.0);
      StiefelSampler sampler(s, r, *ens.seed);
      std::vector<double> minors(np);
      for (long trial = 0; trial < *ens.trials; ++trial) {
        const Eigen::MatrixXd q = sampler.next();
        for (std::size_t a = 0; a < np; ++a) minors[a] = minor_double(q, idx.row(a), idx.col(a));
        for (std::size_t a = 0; a < np; ++a)
          for (std::size_t b = a; b < np; ++b) {
            const double v = minors[a] * minors[b];
            sums[a * np + b] += v;
            squares[a * np + b] += v * v;
          }
      }
      const double trials = static_cast<double>(*ens.trials);
      rep.samples = static_cast<std::size_t>(*ens.trials);
      struct Entry {
        std::size_t a, b;
        double mean, se, z;
      };
      std::vector<Entry> entries;
      for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = a; b < np; ++b) {
          const double mean = sums[a * np + b] / trials;
          const double var = std::max(0.0, (squares[a * np + b] / trials - mean * mean) * trials / (trials - 1));
          const double se = std::sqrt(var / trials);
          const double err = std::abs(mean - (a == b ? expected_diag : 0.0));
          rep.max_abs_error = std::max(rep.max_abs_error, err);
          const double z = se > 0 ? err / se : (err > 1e-12 ? std::numeric_limits<double>::infinity() : 0.0);
          rep.max_z = std::max(rep.max_z, z);
          if (a == b) rep.max_z_diagonal = std::max(rep.max_z_diagonal, z);
          if (z > z_limit) ++rep.beyond_limit;
          entries.push_back(Entry{a, b, mean, se, z});
        }
      rep.quadruples = entries.size();
      rep.family_z_limit = bonferroni_z(z_limit, rep.quadruples);
      for (const auto& e : entries) {
        const bool diagonal = e.a == e.b;
        if (e.z > (diagonal ? z_limit : rep.family_z_limit)) {
          record(rep, idx, e.a, e.b, std::to_string(diagonal ? expected_diag : 0.0), std::to_string(e.mean), e.se);
        }
      }
      return rep;
    }
  }
  return rep;
}

}  // namespace biregular
