#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "biregular/graph.hpp"
#include "biregular/matrix.hpp"
#include "biregular/poly.hpp"

namespace biregular {

// One right vertex joined to k distinct left vertices (1-based ids).
struct Claw {
  int right = 0;
  IndexSet lefts;

  friend bool operator==(const Claw&, const Claw&) = default;
};

using Candidate = Claw;
using ClawMatching = std::vector<Claw>;

// The k-claw matching joining right vertex i to lefts {i, n + i, ..., (k-1)n + i}.
ClawMatching canonical_matching(int n, int k);

// A node of the interlacing tree: d matchings are built one claw at a time.
// `current` holds t claws of the matching under construction; a matching
// that reaches n claws moves to `completed`.
struct BuildState {
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<ClawMatching> completed;
  ClawMatching current;

  static BuildState empty(int n, int k, int d);

  int t() const { return static_cast<int>(current.size()); }
  int l() const { return n - t(); }
  // Matchings fully or partly placed.
  int matchings_in_play() const;
  bool finished() const { return static_cast<int>(completed.size()) == d && current.empty(); }
  // Boundary nodes have no partial matching pending.
  bool at_boundary() const { return current.empty() || t() == n; }

  IndexSet free_left() const;
  IndexSet free_right() const;

  // Throws InvalidInput when a vertex repeats inside a matching, ids are out
  // of range, or more than d matchings are present.
  void validate() const;
  BuildState apply(const Candidate& cand) const;

  BigraphAdjacency adjacency() const;
};

// binom(kl, k) claws at the lowest free right vertex, lexicographic in lefts.
std::vector<Candidate> enumerate_candidates(const BuildState& state);

// Adjacency with free left rows and free right columns moved to the top-left.
RatMatrix arranged_adjacency(const BuildState& state);
// arranged_adjacency plus (1/l) J on the free kl x l block.
RatMatrix assemble_A_plus(const BuildState& state);
RatMatrix assemble_A_plus(const BuildState& state, const Candidate& cand);

// Expected Gram polynomial (degree n, trivial root still present) over the
// uniform completions of the current matching, from theta_hat and
// expected_completion. Needs l >= 1; t = 0 treats the whole next matching
// as random.
RatPoly expected_gram_theta(const BuildState& state);

// Degree n-1 polynomial whose largest root is the expected squared second
// singular value over all completions of `state`: strip the trivial root,
// then convolve in the matchings not yet started.
RatPoly node_gram_poly(const BuildState& state);
RatPoly node_gram_poly(const BuildState& state, const Candidate& cand);

struct StepResult {
  Candidate chosen;
  std::size_t index = 0;       // position of `chosen` among the candidates
  std::size_t candidates = 0;
  RatPoly poly;
  std::optional<RootBracket> bracket;  // none when n = 1 (constant polynomial)
};

// Evaluates every candidate and keeps the one with the smallest max root,
// earliest candidate on ties. Throws InternalError if the winner exceeds the
// parent node.
StepResult greedy_step(const BuildState& state);

struct TrailEntry {
  int matching = 0;  // 1-based
  int claw = 0;      // 1-based position within the matching
  StepResult step;
};

struct ConstructResult {
  BigraphAdjacency graph;
  RatPoly root_poly;
  std::vector<TrailEntry> trail;
};

using StepObserver = std::function<void(const TrailEntry&)>;

// Greedy descent from the canonical first matching.
ConstructResult construct(int n, int k, int d, const StepObserver& observer = {});

// Structured trail text: one line per greedy step.
void write_trail(std::ostream& os, const ConstructResult& result);

// "n k d" header, then "<matching> <right> <left_1> ... <left_k>" per claw,
// 1-based. Only the last matching may be partial.
void write_state(std::ostream& os, const BuildState& state);
BuildState read_state(std::istream& is);

}  // namespace biregular
