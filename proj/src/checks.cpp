#include "biregular/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "biregular/builder.hpp"
#include "biregular/errors.hpp"
#include "biregular/matrix.hpp"
#include "biregular/oracle.hpp"
#include "biregular/rect_conv.hpp"
#include "biregular/verify.hpp"

namespace biregular {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void fail(CheckResult& res, const std::string& msg) {
  res.pass = false;
  if (!res.counterexample) res.counterexample = msg;
  res.details.push_back("FAIL " + msg);
}

void note(CheckResult& res, const std::string& msg) { res.details.push_back(msg); }

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

std::string poly_str(const RatPoly& p) { return p.to_string(); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  // p/q with |p| <= num_max, 1 <= q <= den_max
  Rational rational(int num_lo, int num_hi, int den_max) {
    Rational r(uniform(num_lo, num_hi), uniform(1, den_max));
    r.canonicalize();
    return r;
  }
  RatMatrix matrix(int rows, int cols, int lo, int hi, int den_max) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = rational(lo, hi, den_max);
    return m;
  }
  // monic, degree n, roots in [0, 5]
  RatPoly nonneg_rooted(int n) {
    std::vector<Rational> roots;
    for (int i = 0; i < n; ++i) roots.push_back(rational(0, 20, 4));
    return RatPoly::from_roots(roots);
  }
  IndexSet subset(int n, int k) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(all.begin(), all.end(), gen_);
    all.resize(static_cast<std::size_t>(k));
    std::sort(all.begin(), all.end());
    return IndexSet(std::move(all));
  }

 private:
  std::mt19937_64 gen_;
};

int instances_or(const CheckOptions& o, int fallback) { return o.instances > 0 ? o.instances : fallback; }

// --- expectation identities -------------------------------------------------

void check_quadrature(CheckResult& res, const CheckOptions&) {
  const int cases[][3] = {{2, 1, 2}, {4, 2, 2}, {6, 2, 3}, {6, 3, 2}};  // (m, n, k)
  for (const auto& c : cases) {
    const int m = c[0], n = c[1], k = c[2];
    const auto t0 = Clock::now();
    const RatMatrix claws = claw_matrix(n, k);
    const RatPoly brute = expected_bipartite_charpoly_bruteforce(claws, claws);
    const RatPoly p = divide_out_root(gram_charpoly(claws), Rational(k));
    const ScaledSqrt a{Rational(1), Integer(k)};
    const UnionGram ug = expected_union_gram({p, p}, {a, a}, ConvDims{m, n});
    const RatPoly predicted = RatPoly::monomial(m - n) *
                              RatPoly({-ug.trivial.squared(), Rational(0), Rational(1)}) *
                              s_transform(ug.nontrivial);
    res.max_case_seconds = std::max(res.max_case_seconds, since(t0));
    const std::string tag = "(m,n,k)=" + tuple_str({m, n, k});
    if (brute == predicted) {
      note(res, tag + " brute force = " + poly_str(brute));
    } else {
      fail(res, tag + " brute force " + poly_str(brute) + " != predicted " + poly_str(predicted));
    }
  }
}

std::vector<RatMatrix> all_binary(int rows, int cols) {
  std::vector<RatMatrix> out;
  const unsigned cells = static_cast<unsigned>(rows * cols);
  for (unsigned mask = 0; mask < (1u << cells); ++mask) {
    RatMatrix m(rows, cols);
    for (unsigned b = 0; b < cells; ++b)
      if (mask & (1u << b)) m(static_cast<int>(b) / cols, static_cast<int>(b) % cols) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

void check_convolution_signed(CheckResult& res, const CheckOptions&) {
  const int shapes[][2] = {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};
  for (const auto& sh : shapes) {
    const int m = sh[0], n = sh[1];
    const auto t0 = Clock::now();
    const auto mats = all_binary(m, n);
    std::vector<RatPoly> grams;
    for (const auto& a : mats) grams.push_back(gram_charpoly(a));
    std::size_t pairs = 0, bad = 0;
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = 0; j < mats.size(); ++j) {
        ++pairs;
        const RatPoly brute = expected_gram_charpoly_signed(mats[i], mats[j]);
        const RatPoly conv = rect_conv(grams[i], grams[j], ConvDims{m, n}, RootCheck::Skip);
        if (brute != conv) {
          ++bad;
          std::ostringstream os;
          os << "shape " << m << "x" << n << " pair " << i << "," << j << ": signed average " << poly_str(brute)
             << " != rect_conv " << poly_str(conv);
          fail(res, os.str());
        }
      }
    res.max_case_seconds = std::max(res.max_case_seconds, since(t0));
    note(res, "shape " + std::to_string(m) + "x" + std::to_string(n) + ": " + std::to_string(pairs) + " pairs, " +
                  std::to_string(bad) + " mismatches");
  }
}

// every complete claw matching of K_{kn,n}, in candidate order
std::vector<ClawMatching> all_claw_matchings(int n, int k) {
  std::vector<ClawMatching> out;
  std::function<void(const BuildState&)> rec = [&](const BuildState& s) {
    if (!s.completed.empty()) {
      out.push_back(s.completed.front());
      return;
    }
    for (const auto& c : enumerate_candidates(s)) rec(s.apply(c));
  };
  rec(BuildState::empty(n, k, 1));
  return out;
}

bool golden_case(CheckResult& res, const BuildState& node, const std::string& tag) {
  const RatPoly pipeline = expected_gram_theta(node);
  const RatPoly brute = gram_from_bipartite(
      partial_matching_bruteforce(arranged_adjacency(node), node.k, node.l(), node.t()), node.k * node.n, node.n);
  if (pipeline != brute) {
    fail(res, tag + ": pipeline " + poly_str(pipeline) + " != brute force " + poly_str(brute));
    return false;
  }
  return true;
}

void check_golden_pipeline(CheckResult& res, const CheckOptions&) {
  {
    // k=2, n=3: canonical first matching, one claw of the second placed
    const auto t0 = Clock::now();
    BuildState s = BuildState::empty(3, 2, 2);
    s.completed.push_back(canonical_matching(3, 2));
    int ok = 0, total = 0;
    for (const auto& c : enumerate_candidates(s)) {
      ++total;
      const BuildState child = s.apply(c);
      if (golden_case(res, child, "k=2 n=3 t=1 claw " + std::to_string(total))) ++ok;
    }
    res.max_case_seconds = std::max(res.max_case_seconds, since(t0));
    note(res, "k=2 n=3 t=1 l=2: " + std::to_string(ok) + "/" + std::to_string(total) + " candidates exact");
  }
  {
    // k=2, n=2: one completed matching (every possible one), next matching free
    const auto t0 = Clock::now();
    int ok = 0, total = 0;
    for (const auto& m : all_claw_matchings(2, 2)) {
      ++total;
      BuildState s = BuildState::empty(2, 2, 2);
      s.completed.push_back(m);
      if (golden_case(res, s, "k=2 n=2 t=0 first matching " + std::to_string(total))) ++ok;
    }
    res.max_case_seconds = std::max(res.max_case_seconds, since(t0));
    note(res, "k=2 n=2 t=0 l=2: " + std::to_string(ok) + "/" + std::to_string(total) + " first matchings exact");
  }
}

// --- bounds -----------------------------------------------------------------

void check_root_bound(CheckResult& res, const CheckOptions& opts) {
  const int cases[][3] = {{2, 2, 2}, {3, 2, 3}, {4, 3, 2}};  // (n, k, d)
  const Rational tol = pow2_neg(64);
  for (const auto& c : cases) {
    const int n = c[0], k = c[1], d = c[2];
    const auto t0 = Clock::now();
    const RatPoly root = node_gram_poly(BuildState::empty(n, k, d));
    const RootBracket br = max_root(root, tol);
    const Enclosure bound = ramanujan_bound_squared(k, d, opts.precision_bits);
    res.max_case_seconds = std::max(res.max_case_seconds, since(t0));
    const std::string tag = "(n,k,d)=" + tuple_str({n, k, d});
    std::ostringstream os;
    os << tag << " maxroot in (" << to_decimal(br.lo, 22) << ", " << to_decimal(br.hi, 22) << "], bound^2 "
       << bound.to_string(22);
    if (br.width() > tol) {
      fail(res, tag + " bracket wider than 2^-64");
    } else if (!(br.hi <= bound.lo())) {
      fail(res, os.str() + " not below");
    } else {
      note(res, os.str());
    }
  }
}

void check_cor_ok(CheckResult& res, const CheckOptions& opts) {
  int count = 0;
  for (int theta = 2; theta <= 4; ++theta)
    for (int n = 1; n <= 3; ++n)
      for (int m = n; m <= n + 3; ++m)
        for (int d = 2; d <= 4; ++d) {
          ++count;
          const RatPoly q = rect_conv_iter(RatPoly::linear_power(Rational(theta), n), d, ConvDims{m, n});
          const RootBracket br = max_root(q);
          // lambda_1 of S(q) is the square root of the max root of q
          const Enclosure lambda = Enclosure(br.lo < 0 ? Rational(0) : br.lo, br.hi).sqrt(opts.precision_bits);
          const Enclosure bound = cor_ok_bound(Rational(theta), m, n, d, opts.precision_bits);
          if (!(lambda.hi() <= bound.lo())) {
            fail(res, "theta=" + std::to_string(theta) + " (m,n,d)=" + tuple_str({m, n, d}) + ": lambda_1 " +
                          lambda.to_string(12) + " exceeds " + bound.to_string(12));
          }
        }
  note(res, std::to_string(count) + " (theta, m, n, d) cases");
}

void check_better_than_ramanujan(CheckResult& res, const CheckOptions& opts) {
  int count = 0;
  for (int k = 1; k <= 4; ++k)
    for (int d = 2; d <= 5; ++d)
      for (int n = 1; n <= 6; ++n) {
        ++count;
        if (!better_than_ramanujan_check(k, d, n, opts.precision_bits)) {
          fail(res, "(k,d,n)=" + tuple_str({k, d, n}));
        }
      }
  note(res, std::to_string(count) + " (k, d, n) cases");
}

// --- construction -----------------------------------------------------------

void check_construct(CheckResult& res, const CheckOptions& opts) {
  const int cases[][3] = {{2, 2, 2}, {3, 2, 3}, {4, 2, 2}, {3, 3, 2}};  // (n, k, d)
  for (const auto& c : cases) {
    const int n = c[0], k = c[1], d = c[2];
    const auto t0 = Clock::now();
    const ConstructResult built = construct(n, k, d);
    const bool biregular = check_biregular(built.graph, n, k, d);
    const SpectralCertificate cert = certify_ramanujan(built.graph, n, k, d, opts.precision_bits);
    const double lambda2 = lambda2_numeric(built.graph);
    const double elapsed = since(t0);
    res.max_case_seconds = std::max(res.max_case_seconds, elapsed);
    const double bound = std::sqrt(d - 1.0) + std::sqrt(k * d - 1.0);
    std::ostringstream os;
    os.precision(12);
    os << "(n,k,d)=" << tuple_str({n, k, d}) << " biregular=" << (biregular ? "yes" : "no")
       << " certificate=" << (cert.valid() ? "valid" : "INVALID") << " lambda2=" << lambda2 << " bound=" << bound
       << " steps=" << built.trail.size() << " time=" << elapsed << "s";
    if (biregular && cert.valid() && lambda2 <= bound + 1e-9) {
      note(res, os.str());
    } else {
      fail(res, os.str());
    }
  }
}

// enumerates every node below `state` and compares each parent with the
// average of its children
void parent_child(CheckResult& res, const BuildState& state, int& nodes) {
  if (state.finished()) return;
  ++nodes;
  const auto cands = enumerate_candidates(state);
  RatPoly sum;
  for (const auto& c : cands) {
    const BuildState child = state.apply(c);
    sum += node_gram_poly(child);
    parent_child(res, child, nodes);
  }
  const RatPoly avg = sum * Rational(1, static_cast<long>(cands.size()));
  const RatPoly parent = node_gram_poly(state);
  if (avg != parent) {
    std::ostringstream os;
    write_state(os, state);
    fail(res, "children average " + poly_str(avg) + " != parent " + poly_str(parent) + " at state " + os.str());
  }
}

void check_parent_child(CheckResult& res, const CheckOptions&) {
  int nodes = 0;
  parent_child(res, BuildState::empty(2, 2, 2), nodes);
  note(res, "(n,k,d)=(2,2,2): " + std::to_string(nodes) + " internal nodes");
}

// --- matrix identities ------------------------------------------------------

void check_det_sum(CheckResult& res, const CheckOptions& opts) {
  Rng rng(opts.seed);
  const int count = instances_or(opts, 100);
  for (int i = 0; i < count; ++i) {
    const int n = rng.uniform(1, 5);
    const RatMatrix a = rng.matrix(n, n, -3, 3, 3), b = rng.matrix(n, n, -3, 3, 3);
    if (det_sum_expansion(a, b) != determinant(a + b)) fail(res, "instance " + std::to_string(i) + " n=" + std::to_string(n));
  }
  note(res, std::to_string(count) + " random pairs up to 5x5");
}

void check_cauchy_binet(CheckResult& res, const CheckOptions& opts) {
  Rng rng(opts.seed + 1);
  const int count = instances_or(opts, 100);
  for (int i = 0; i < count; ++i) {
    const int p = rng.uniform(1, 5), q = rng.uniform(1, 5), r = rng.uniform(1, 5);
    const RatMatrix a = rng.matrix(p, q, -3, 3, 3), b = rng.matrix(q, r, -3, 3, 3);
    const int size = rng.uniform(0, std::min(p, r));
    const IndexSet s = rng.subset(p, size), t = rng.subset(r, size);
    if (cauchy_binet(a, b, s, t) != minor(a * b, s, t)) {
      fail(res, "instance " + std::to_string(i) + " shapes " + tuple_str({p, q, r}) + " size " + std::to_string(size));
    }
  }
  note(res, std::to_string(count) + " random products up to 5x5");
}

void check_principal_minors(CheckResult& res, const CheckOptions& opts) {
  Rng rng(opts.seed + 2);
  const int count = instances_or(opts, 100);
  for (int i = 0; i < count; ++i) {
    const int n = rng.uniform(1, 5);
    const RatMatrix m = rng.matrix(n, n, -3, 3, 3);
    if (charpoly_via_principal_minors(m) != charpoly_plus(m)) fail(res, "instance " + std::to_string(i));
  }
  note(res, std::to_string(count) + " random matrices up to 5x5");
}

std::string describe(const MinorOrthReport& rep) {
  std::ostringstream os;
  os << rep.quadruples << " pairs over " << rep.samples << " members, max |err| " << rep.max_abs_error;
  if (!rep.exact && rep.family_z_limit > 0) {
    os << ", max z " << rep.max_z << " (diagonal " << rep.max_z_diagonal << ", family limit " << rep.family_z_limit
       << ", " << rep.beyond_limit << " beyond 3 sigma)";
  }
  return os.str();
}

std::string describe(const MinorOrthViolation& v) {
  auto set = [](const IndexSet& s) {
    std::string out = "{";
    for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
  };
  std::string s = "S=" + set(v.s) + " T=" + set(v.t) + " U=" + set(v.u) + " V=" + set(v.v) + " expected " +
                  v.expected + " observed " + v.observed;
  if (v.sigma > 0) s += " sigma " + std::to_string(v.sigma);
  return s;
}

void minor_orth_family(CheckResult& res, EnsembleKind kind, int max_dim) {
  for (int dim = 1; dim <= max_dim; ++dim)
    for (int i = 0; i <= dim; ++i) {
      PermEnsemble ens;
      ens.kind = kind;
      ens.dim = dim;
      const MinorOrthReport rep = minor_orthogonality_check(ens, i);
      const std::string tag = to_string(kind) + " dim " + std::to_string(dim) + " |S|=" + std::to_string(i);
      if (rep.pass) {
        note(res, tag + ": " + describe(rep));
      } else {
        fail(res, tag + ": " + describe(rep.violations.front()));
      }
    }
}

void check_minor_orth_signed(CheckResult& res, const CheckOptions&) {
  minor_orth_family(res, EnsembleKind::SignedPermutation, 4);
}

void check_minor_orth_standard(CheckResult& res, const CheckOptions&) {
  minor_orth_family(res, EnsembleKind::StandardRepresentation, 4);
}

void check_minor_orth_permutation_control(CheckResult& res, const CheckOptions&) {
  // plain permutations are not minor-orthogonal; the check must notice
  PermEnsemble ens;
  ens.kind = EnsembleKind::Permutation;
  ens.dim = 3;
  const MinorOrthReport rep = minor_orthogonality_check(ens, 1);
  if (rep.pass) {
    fail(res, "plain permutations passed the minor-orthogonality check");
  } else {
    note(res, "rejected as expected: " + describe(rep.violations.front()));
  }
}

void check_minor_orth_stiefel(CheckResult& res, const CheckOptions& opts) {
  PermEnsemble ens;
  ens.kind = EnsembleKind::StiefelMC;
  ens.dim = 5;
  ens.frame_cols = 3;
  ens.trials = opts.trials;
  ens.seed = opts.seed;
  const MinorOrthReport rep = minor_orthogonality_check(ens, 2);
  const std::string tag = "stiefel (s,r)=(5,3) |S|=2 seed " + std::to_string(opts.seed) + " trials " +
                          std::to_string(opts.trials);
  if (rep.pass) {
    note(res, tag + ": " + describe(rep));
  } else {
    note(res, tag + ": " + describe(rep));
    fail(res, tag + ": " + describe(rep.violations.front()));
  }
}

// --- convolution properties -------------------------------------------------

void check_conv_algebra(CheckResult& res, const CheckOptions& opts) {
  Rng rng(opts.seed + 3);
  const int count = instances_or(opts, 50);
  int identity = 0, bilinear = 0, assoc = 0;
  for (int i = 0; i < count; ++i) {
    const int n = rng.uniform(1, 5), m = n + rng.uniform(0, 3);
    const ConvDims dims{m, n};
    const RatPoly p = rng.nonneg_rooted(n), p2 = rng.nonneg_rooted(n), q = rng.nonneg_rooted(n),
                  r = rng.nonneg_rooted(n);
    const Rational alpha = rng.rational(1, 9, 5), beta = rng.rational(1, 9, 5);
    const std::string tag = "instance " + std::to_string(i) + " (m,n)=" + tuple_str({m, n});

    if (rect_conv(p, RatPoly::monomial(n), dims) == p) ++identity;
    else fail(res, tag + ": x^n is not the identity for " + poly_str(p));

    const RatPoly lhs = rect_conv(alpha * p + beta * p2, q, dims, RootCheck::Skip);
    const RatPoly rhs = alpha * rect_conv(p, q, dims) + beta * rect_conv(p2, q, dims);
    if (lhs == rhs) ++bilinear;
    else fail(res, tag + ": bilinearity");

    if (rect_conv(rect_conv(p, q, dims), r, dims) == rect_conv(p, rect_conv(q, r, dims), dims)) ++assoc;
    else fail(res, tag + ": associativity");
  }
  note(res, "identity " + std::to_string(identity) + "/" + std::to_string(count) + ", bilinearity " +
                std::to_string(bilinear) + "/" + std::to_string(count) + ", associativity " + std::to_string(assoc) +
                "/" + std::to_string(count));
}

void check_conv_real_rooted(CheckResult& res, const CheckOptions& opts) {
  Rng rng(opts.seed + 4);
  const int count = instances_or(opts, 50);
  int ok = 0;
  for (int i = 0; i < count; ++i) {
    const int n = rng.uniform(1, 6), m = n + rng.uniform(0, 3);
    const RatPoly out = rect_conv(rng.nonneg_rooted(n), rng.nonneg_rooted(n), ConvDims{m, n});
    if (is_real_rooted(out) && has_nonnegative_roots(out)) ++ok;
    else fail(res, "instance " + std::to_string(i) + ": " + poly_str(out));
  }
  note(res, std::to_string(ok) + "/" + std::to_string(count) + " outputs real-rooted with nonnegative roots");
}

Enclosure q_enclosure(const RatPoly& p, ConvDims dims, const Rational& u) {
  const RootBracket br = q_transform(p, dims, u);
  return Enclosure(br.lo, br.hi);
}

void check_q_transform(CheckResult& res, const CheckOptions& opts) {
  Rng rng(opts.seed + 5);
  const int count = instances_or(opts, 50);
  int mono = 0, sub = 0;
  Rational min_slack;
  bool have_slack = false;
  for (int i = 0; i < count; ++i) {
    const int n = rng.uniform(1, 4), m = n + rng.uniform(0, 3);
    const ConvDims dims{m, n};
    const RatPoly p = rng.nonneg_rooted(n), q = rng.nonneg_rooted(n);
    const Rational u = rng.rational(0, 8, 4);
    const std::string tag = "instance " + std::to_string(i) + " (m,n)=" + tuple_str({m, n}) + " u=" +
                            to_fraction_string(u);

    // monotone in u
    const Rational u2 = u + rng.rational(1, 8, 4);
    const Enclosure qa = q_enclosure(p, dims, u), qb = q_enclosure(p, dims, u2);
    if (qb.hi() >= qa.lo()) ++mono;
    else fail(res, tag + ": Q decreased from " + qa.to_string(12) + " to " + qb.to_string(12));

    // subadditivity at u^2
    const Rational uu = u * u;
    const Enclosure shift(Rational((m - n) * (m - n)) * uu);
    auto side = [&](const RatPoly& poly) { return (q_enclosure(poly, dims, uu).square() + shift).sqrt(opts.precision_bits); };
    const Enclosure lhs = side(rect_conv(p, q, dims));
    const Enclosure rhs = side(p) + side(q) - Enclosure(Rational((m + n) * u));
    const Rational slack = rhs.hi() - lhs.lo();
    if (!have_slack || slack < min_slack) {
      min_slack = slack;
      have_slack = true;
    }
    if (lhs.lo() <= rhs.hi()) ++sub;
    else fail(res, tag + ": subadditivity " + lhs.to_string(12) + " > " + rhs.to_string(12));
  }
  note(res, "monotone " + std::to_string(mono) + "/" + std::to_string(count) + ", subadditive " + std::to_string(sub) +
                "/" + std::to_string(count) + ", smallest slack " + (have_slack ? sci(min_slack.get_d()) : "-"));
}

struct Entry {
  const char* summary;
  void (*run)(CheckResult&, const CheckOptions&);
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = {
      {"quadrature", {"bipartite expectation over S_m x S_n equals the convolution formula", check_quadrature}},
      {"convolution-signed", {"signed-permutation Gram expectation equals rect_conv, all 0/1 matrices up to 3x2",
                              check_convolution_signed}},
      {"golden-pipeline", {"theta_hat + expected_completion equals brute-force partial matchings", check_golden_pipeline}},
      {"root-bound", {"root node max root below the squared Ramanujan bound", check_root_bound}},
      {"cor-ok", {"max root of the d-fold convolution of (x - theta)^n below the closed-form bound", check_cor_ok}},
      {"better-than-ramanujan", {"shifted bound <= Ramanujan bound on a (k, d, n) grid", check_better_than_ramanujan}},
      {"construct", {"greedy construction yields certified Ramanujan biregular graphs", check_construct}},
      {"parent-child", {"children average equals parent on every node of the (2,2,2) tree", check_parent_child}},
      {"det-sum", {"det(A + B) minor expansion on random pairs", check_det_sum}},
      {"cauchy-binet", {"Cauchy-Binet on random products", check_cauchy_binet}},
      {"principal-minors", {"det(xI + M) from principal minors on random matrices", check_principal_minors}},
      {"minor-orth-signed", {"minor orthogonality of signed permutations up to dimension 4", check_minor_orth_signed}},
      {"minor-orth-standard",
       {"minor orthogonality of the standard representation up to dimension 4", check_minor_orth_standard}},
      {"minor-orth-permutation-control",
       {"plain permutations are rejected by the minor-orthogonality check", check_minor_orth_permutation_control}},
      {"minor-orth-stiefel", {"Monte Carlo minor orthogonality of Stiefel frames (5,3)", check_minor_orth_stiefel}},
      {"conv-algebra", {"identity, bilinearity and associativity of rect_conv", check_conv_algebra}},
      {"conv-real-rooted", {"rect_conv outputs are real-rooted with nonnegative roots", check_conv_real_rooted}},
      {"q-transform", {"monotonicity and subadditivity of the Q transform", check_q_transform}},
  };
  return r;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    const char* order[] = {"quadrature",          "convolution-signed", "golden-pipeline",
                           "root-bound",          "cor-ok",             "better-than-ramanujan",
                           "construct",           "parent-child",       "det-sum",
                           "cauchy-binet",        "principal-minors",   "minor-orth-signed",
                           "minor-orth-standard", "minor-orth-permutation-control",
                           "minor-orth-stiefel",  "conv-algebra",       "conv-real-rooted",
                           "q-transform"};
    std::vector<CheckInfo> out;
    for (const char* name : order) out.push_back(CheckInfo{name, registry().at(name).summary});
    return out;
  }();
  return catalog;
}

CheckResult run_check(const std::string& name, const CheckOptions& opts) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidInput("unknown check '" + name + "'");
  CheckResult res;
  res.name = name;
  const auto t0 = Clock::now();
  it->second.run(res, opts);
  res.seconds = since(t0);
  return res;
}

}  // namespace biregular
