#include "biregular/builder.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "biregular/errors.hpp"
#include "biregular/parallel.hpp"
#include "biregular/rect_conv.hpp"
#include "biregular/theta.hpp"

namespace biregular {

ClawMatching canonical_matching(int n, int k) {
  ClawMatching m;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> lefts;
    for (int c = 0; c < k; ++c) lefts.push_back(c * n + i);
    m.push_back(Claw{i, IndexSet(std::move(lefts))});
  }
  return m;
}

BuildState BuildState::empty(int n, int k, int d) {
  BuildState s;
  s.n = n;
  s.k = k;
  s.d = d;
  s.validate();
  return s;
}

int BuildState::matchings_in_play() const {
  return static_cast<int>(completed.size()) + (current.empty() ? 0 : 1);
}

IndexSet BuildState::free_left() const {
  std::vector<bool> used(static_cast<std::size_t>(k * n) + 1, false);
  for (const auto& c : current)
    for (int v : c.lefts) used[static_cast<std::size_t>(v)] = true;
  std::vector<int> out;
  for (int v = 1; v <= k * n; ++v)
    if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
  return IndexSet(std::move(out));
}

IndexSet BuildState::free_right() const {
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : current) used[static_cast<std::size_t>(c.right)] = true;
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
  return IndexSet(std::move(out));
}

namespace {

void validate_matching(const ClawMatching& m, int n, int k, const std::string& what) {
  if (static_cast<int>(m.size()) > n) throw InvalidInput(what + " has more than n claws");
  std::vector<bool> right_used(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> left_used(static_cast<std::size_t>(k * n) + 1, false);
  for (const auto& c : m) {
    if (c.right < 1 || c.right > n) throw InvalidInput(what + ": right vertex " + std::to_string(c.right) + " out of range");
    if (right_used[static_cast<std::size_t>(c.right)]) {
      throw InvalidInput(what + ": right vertex " + std::to_string(c.right) + " used twice");
    }
    right_used[static_cast<std::size_t>(c.right)] = true;
    if (static_cast<int>(c.lefts.size()) != k) throw InvalidInput(what + ": a claw needs exactly k left vertices");
    for (int v : c.lefts) {
      if (v < 1 || v > k * n) throw InvalidInput(what + ": left vertex " + std::to_string(v) + " out of range");
      if (left_used[static_cast<std::size_t>(v)]) {
        throw InvalidInput(what + ": left vertex " + std::to_string(v) + " used twice");
      }
      left_used[static_cast<std::size_t>(v)] = true;
    }
  }
}

}  // namespace

void BuildState::validate() const {
  if (n < 1 || k < 1 || d < 1) throw InvalidInput("n, k, d must be >= 1");
  if (matchings_in_play() > d) throw InvalidInput("more than d matchings placed");
  for (std::size_t i = 0; i < completed.size(); ++i) {
    const std::string what = "matching " + std::to_string(i + 1);
    if (static_cast<int>(completed[i].size()) != n) throw InvalidInput(what + " is incomplete");
    validate_matching(completed[i], n, k, what);
  }
  validate_matching(current, n, k, "matching " + std::to_string(completed.size() + 1));
}

BuildState BuildState::apply(const Candidate& cand) const {
  BuildState next = *this;
  if (next.current.size() == static_cast<std::size_t>(n)) {
    next.completed.push_back(std::move(next.current));
    next.current.clear();
  }
  next.current.push_back(cand);
  next.validate();
  if (next.current.size() == static_cast<std::size_t>(n)) {
    next.completed.push_back(std::move(next.current));
    next.current.clear();
  }
  return next;
}

BigraphAdjacency BuildState::adjacency() const {
  BigraphAdjacency g(n, k, d);
  auto add = [&](const ClawMatching& m) {
    for (const auto& c : m)
      for (int v : c.lefts) g.at(v - 1, c.right - 1) += 1;
  };
  for (const auto& m : completed) add(m);
  add(current);
  return g;
}

std::vector<Candidate> enumerate_candidates(const BuildState& state) {
  state.validate();
  if (state.finished()) throw InvalidInput("all d matchings are complete");
  if (state.l() == 0) throw InvalidInput("the current matching is complete");
  const IndexSet free_l = state.free_left(), free_r = state.free_right();
  const int right = free_r.indices().front();
  std::vector<Candidate> out;
  for (const auto& sub : IndexSet::subsets(static_cast<int>(free_l.size()), state.k)) {
    std::vector<int> lefts;
    for (int pos : sub) lefts.push_back(free_l.indices()[static_cast<std::size_t>(pos - 1)]);
    out.push_back(Claw{right, IndexSet(std::move(lefts))});
  }
  return out;
}

RatMatrix arranged_adjacency(const BuildState& state) {
  state.validate();
  const RatMatrix a = state.adjacency().to_matrix();
  if (state.l() == 0) return a;

  const IndexSet free_l = state.free_left(), free_r = state.free_right();
  std::vector<int> row_order(free_l.begin(), free_l.end());
  for (int v : free_l.complement(state.k * state.n)) row_order.push_back(v);
  std::vector<int> col_order(free_r.begin(), free_r.end());
  for (int v : free_r.complement(state.n)) col_order.push_back(v);

  RatMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out(i, j) = a(row_order[static_cast<std::size_t>(i)] - 1, col_order[static_cast<std::size_t>(j)] - 1);
  return out;
}

RatMatrix assemble_A_plus(const BuildState& state) {
  RatMatrix out = arranged_adjacency(state);
  const int l = state.l();
  if (l == 0) return out;
  const Rational e(1, l);
  for (int i = 0; i < state.k * l; ++i)
    for (int j = 0; j < l; ++j) out(i, j) += e;
  return out;
}

RatMatrix assemble_A_plus(const BuildState& state, const Candidate& cand) {
  return assemble_A_plus(state.apply(cand));
}

RatPoly expected_gram_theta(const BuildState& state) {
  state.validate();
  const int n = state.n, k = state.k, l = state.l(), t = state.t();
  if (l < 1) throw InvalidInput("expected_gram_theta needs a matching with free claws");
  const ThetaTable tab = theta_hat(assemble_A_plus(state), k, l, t);
  return gram_poly_from_completion(expected_completion(tab, FrameDims{k * n, n, k * l - 1, l - 1}, Rational(k)));
}

RatPoly node_gram_poly(const BuildState& state) {
  state.validate();
  const int n = state.n, k = state.k, d = state.d;
  const int r = state.matchings_in_play();
  RatPoly gram;
  if (state.at_boundary()) {
    gram = gram_charpoly(state.adjacency().to_matrix());
  } else {
    // with one claw left it is forced and A+ is the completed adjacency
    gram = state.l() == 1 ? gram_charpoly(assemble_A_plus(state)) : expected_gram_theta(state);
  }

  RatPoly reduced;
  try {
    reduced = divide_out_root(gram, Rational(r * r * k));
  } catch (const NotARoot&) {
    throw InternalError("node polynomial " + gram.to_string() + " lacks the trivial root " +
                        std::to_string(r * r * k));
  }

  if (r < d) {
    const RatPoly step = RatPoly::linear_power(Rational(k), n - 1);
    const ConvDims dims{k * n - 1, n - 1};
    for (int i = r; i < d; ++i) reduced = rect_conv(reduced, step, dims, RootCheck::Skip);
  }
  return reduced;
}

RatPoly node_gram_poly(const BuildState& state, const Candidate& cand) { return node_gram_poly(state.apply(cand)); }

StepResult greedy_step(const BuildState& state) {
  const auto cands = enumerate_candidates(state);
  auto polys = parallel_map(cands.size(), [&](std::size_t i) { return node_gram_poly(state, cands[i]); });

  StepResult res;
  res.candidates = cands.size();
  if (state.n == 1) {
    res.chosen = cands.front();
    res.poly = polys.front();
    return res;
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < polys.size(); ++i) {
    if (polys[i] == polys[best]) continue;
    if (compare_max_roots(polys[i], polys[best]) < 0) best = i;
  }
  const RatPoly parent = node_gram_poly(state);
  if (polys[best] != parent && compare_max_roots(polys[best], parent) > 0) {
    throw InternalError("greedy winner " + polys[best].to_string() + " has a larger max root than its parent " +
                        parent.to_string());
  }
  res.chosen = cands[best];
  res.index = best;
  res.poly = std::move(polys[best]);
  res.bracket = max_root(res.poly);
  return res;
}

ConstructResult construct(int n, int k, int d, const StepObserver& observer) {
  BuildState state = BuildState::empty(n, k, d);
  ConstructResult out;
  out.root_poly = node_gram_poly(state);
  // every choice of first matching is isospectral to this one
  state.completed.push_back(canonical_matching(n, k));
  while (!state.finished()) {
    TrailEntry entry;
    entry.matching = static_cast<int>(state.completed.size()) + 1;
    entry.claw = state.t() + 1;
    entry.step = greedy_step(state);
    state = state.apply(entry.step.chosen);
    if (observer) observer(entry);
    out.trail.push_back(std::move(entry));
  }
  out.graph = state.adjacency();
  return out;
}

namespace {

std::string join_lefts(const IndexSet& s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string poly_csv(const RatPoly& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ',';
    out += to_fraction_string(c);
  }
  return out;
}

}  // namespace

void write_trail(std::ostream& os, const ConstructResult& result) {
  os << "root poly=" << poly_csv(result.root_poly) << '\n';
  for (const auto& e : result.trail) {
    os << "step matching=" << e.matching << " claw=" << e.claw << " right=" << e.step.chosen.right
       << " lefts=" << join_lefts(e.step.chosen.lefts) << " candidates=" << e.step.candidates;
    if (e.step.bracket) {
      os << " maxroot_lo=" << to_decimal(e.step.bracket->lo, 24) << " maxroot_hi=" << to_decimal(e.step.bracket->hi, 24);
    }
    os << " poly=" << poly_csv(e.step.poly) << '\n';
  }
}

void write_state(std::ostream& os, const BuildState& state) {
  os << state.n << ' ' << state.k << ' ' << state.d << '\n';
  auto emit = [&](const ClawMatching& m, std::size_t idx) {
    for (const auto& c : m) {
      os << idx << ' ' << c.right;
      for (int v : c.lefts) os << ' ' << v;
      os << '\n';
    }
  };
  for (std::size_t i = 0; i < state.completed.size(); ++i) emit(state.completed[i], i + 1);
  emit(state.current, state.completed.size() + 1);
}

BuildState read_state(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InvalidInput("state: missing header");
  std::istringstream header(line);
  BuildState state;
  if (!(header >> state.n >> state.k >> state.d)) throw InvalidInput("state: header must be 'n k d'");
  if (state.n < 1 || state.k < 1 || state.d < 1) throw InvalidInput("state: n, k, d must be >= 1");

  std::map<int, ClawMatching> by_index;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int idx = 0, right = 0;
    if (!(ls >> idx >> right)) throw InvalidInput("state line " + std::to_string(lineno) + ": bad claw");
    std::vector<int> lefts;
    int v = 0;
    while (ls >> v) lefts.push_back(v);
    if (static_cast<int>(lefts.size()) != state.k) {
      throw InvalidInput("state line " + std::to_string(lineno) + ": expected k left vertices");
    }
    std::sort(lefts.begin(), lefts.end());
    if (std::adjacent_find(lefts.begin(), lefts.end()) != lefts.end()) {
      throw InvalidInput("state line " + std::to_string(lineno) + ": repeated left vertex in a claw");
    }
    by_index[idx].push_back(Claw{right, IndexSet(std::move(lefts))});
  }

  int expected = 1;
  for (auto& [idx, m] : by_index) {
    if (idx != expected++) throw InvalidInput("state: matchings must be numbered 1, 2, ... without gaps");
    if (static_cast<int>(m.size()) == state.n) {
      if (!state.current.empty()) throw InvalidInput("state: only the last matching may be partial");
      state.completed.push_back(std::move(m));
    } else {
      if (!state.current.empty()) throw InvalidInput("state: only the last matching may be partial");
      state.current = std::move(m);
    }
  }
  state.validate();
  return state;
}

}  // namespace biregular
