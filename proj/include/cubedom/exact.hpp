#pragma once

// Exact domination numbers for small cubes by iterative-deepening
// branch and bound.
//
// Both solvers exploit that XOR translation is an automorphism of Q_n acting
// transitively: any candidate set can be translated onto one containing
// vertex 0 (which is then its smallest member), so the search fixes 0 inside
// the set once and for all.  Results carry a witness and an explicit
// proven / budget_exhausted status; a budgeted run never pretends to a proof.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubedom/constructions.hpp"
#include "cubedom/core.hpp"
#include "cubedom/domination.hpp"

namespace cubedom {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 300.0;
};

enum class SearchStatus { proven, budget_exhausted };

inline const char* to_string(SearchStatus s) {
  return s == SearchStatus::proven ? "proven" : "budget_exhausted";
}

struct ExactResult {
  int n = 0;
  std::string parameter;  // "gamma" or "gamma_c"
  std::uint64_t value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  SearchStatus status = SearchStatus::proven;

  ExactResult() : witness(1) {}
};

namespace detail {

struct SearchState {
  std::chrono::steady_clock::time_point deadline;
  std::uint64_t node_limit = 0;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  // The clock is only consulted every few thousand nodes.
  bool charge_node() {
    if (out_of_budget) return false;
    ++nodes;
    if (nodes > node_limit ||
        ((nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline)) {
      out_of_budget = true;
      return false;
    }
    return true;
  }
};

// Depth-limited search for a dominating set of size <= limit containing
// vertex 0.  Branches on the uncovered vertex with the fewest usable
// dominators; each candidate is tried as a member and then banned for the
// rest of this subtree.  Bound: every new member covers at most n+1 vertices.
class GammaSearch {
 public:
  GammaSearch(int n, std::uint64_t limit, SearchState& state)
      : n_(n), limit_(limit), state_(state), covered_(n), banned_(n), solution_(n) {}

  bool run() {
    chosen_.push_back(0);
    covered_ = closed_neighborhood(0, n_);
    return descend();
  }

  const VertexSet& solution() const { return solution_; }

 private:
  bool descend() {
    if (!state_.charge_node()) return false;
    const std::uint64_t uncovered = universe_size(n_) - covered_.size();
    if (uncovered == 0) {
      solution_ = VertexSet(n_);
      for (Vertex v : chosen_) solution_.insert(v);
      return true;
    }
    if (chosen_.size() >= limit_) return false;
    if (chosen_.size() + ceil_div(uncovered, std::uint64_t(n_) + 1) > limit_) return false;

    // most-constrained uncovered vertex; ties to the smallest vertex
    Vertex branch_vertex = 0;
    int best_count = n_ + 2;
    for (std::uint64_t v = 0; v < universe_size(n_) && best_count > 0; ++v) {
      if (covered_.contains(Vertex(v))) continue;
      int count = banned_.contains(Vertex(v)) ? 0 : 1;
      for (int d = 0; d < n_; ++d)
        if (!banned_.contains(Vertex(v) ^ (Vertex{1} << d))) ++count;
      if (count < best_count) {
        best_count = count;
        branch_vertex = Vertex(v);
      }
    }
    if (best_count == 0) return false;

    std::vector<Vertex> candidates;
    candidates.reserve(std::size_t(n_) + 1);
    if (!banned_.contains(branch_vertex)) candidates.push_back(branch_vertex);
    for (int d = 0; d < n_; ++d) {
      const Vertex w = branch_vertex ^ (Vertex{1} << d);
      if (!banned_.contains(w)) candidates.push_back(w);
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<Vertex> banned_here;
    bool found = false;
    for (Vertex c : candidates) {
      chosen_.push_back(c);
      const VertexSet saved = covered_;
      covered_ |= closed_neighborhood(c, n_);
      found = descend();
      covered_ = saved;
      chosen_.pop_back();
      if (found || state_.out_of_budget) break;
      banned_.insert(c);
      banned_here.push_back(c);
    }
    for (Vertex c : banned_here) banned_.erase(c);
    return found;
  }

  int n_;
  std::uint64_t limit_;
  SearchState& state_;
  std::vector<Vertex> chosen_;
  VertexSet covered_;
  VertexSet banned_;
  VertexSet solution_;
};

// Depth-limited search for a connected dominating set of size <= limit
// containing vertex 0.  Grows connected sets only: candidates are vertices
// adjacent to the current set, tried in increasing order, each banned for the
// remaining siblings after its branch (so no connected superset is revisited).
// Bound: a new member is itself already dominated and has a neighbor inside
// the set, so it covers at most n-1 new vertices.
class GammaConnectedSearch {
 public:
  GammaConnectedSearch(int n, std::uint64_t limit, SearchState& state)
      : n_(n), limit_(limit), state_(state), members_(n), covered_(n), banned_(n),
        solution_(n) {}

  bool run() {
    chosen_.push_back(0);
    members_.insert(0);
    covered_ = closed_neighborhood(0, n_);
    return descend();
  }

  const VertexSet& solution() const { return solution_; }

 private:
  bool descend() {
    if (!state_.charge_node()) return false;
    if (covered_.is_universe()) {
      solution_ = members_;
      return true;
    }
    if (chosen_.size() >= limit_) return false;
    const std::uint64_t uncovered = universe_size(n_) - covered_.size();
    if (chosen_.size() + ceil_div(uncovered, std::uint64_t(n_) - 1) > limit_) return false;

    std::vector<Vertex> frontier;
    for (Vertex m : chosen_)
      for (int d = 0; d < n_; ++d) {
        const Vertex w = m ^ (Vertex{1} << d);
        if (!members_.contains(w) && !banned_.contains(w)) {
          banned_.insert(w);  // reused as a dedup mark, undone below
          frontier.push_back(w);
        }
      }
    for (Vertex w : frontier) banned_.erase(w);
    std::sort(frontier.begin(), frontier.end());

    std::vector<Vertex> banned_here;
    bool found = false;
    for (Vertex c : frontier) {
      chosen_.push_back(c);
      members_.insert(c);
      const VertexSet saved = covered_;
      covered_ |= closed_neighborhood(c, n_);
      found = descend();
      covered_ = saved;
      members_.erase(c);
      chosen_.pop_back();
      if (found || state_.out_of_budget) break;
      banned_.insert(c);
      banned_here.push_back(c);
    }
    for (Vertex c : banned_here) banned_.erase(c);
    return found;
  }

  int n_;
  std::uint64_t limit_;
  SearchState& state_;
  std::vector<Vertex> chosen_;
  VertexSet members_;
  VertexSet covered_;
  VertexSet banned_;
  VertexSet solution_;
};

inline SearchState make_state(const SearchBudget& budget) {
  SearchState s;
  s.node_limit = budget.max_nodes;
  s.deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(budget.max_seconds));
  return s;
}

}  // namespace detail

// Minimum dominating set size of Q_n.  Iterative deepening from the packing
// lower bound up to a greedy incumbent; each depth either proves emptiness or
// returns a witness, so the first hit is optimal.
inline ExactResult exact_gamma(int n, const SearchBudget& budget = {}) {
  check_dimension(n);
  ExactResult result;
  result.n = n;
  result.parameter = "gamma";
  result.witness = greedy_dominating(n);

  const std::uint64_t lb = lower_bounds(n).gamma_lower;
  auto state = detail::make_state(budget);
  for (std::uint64_t target = lb; target < result.witness.size(); ++target) {
    detail::GammaSearch search(n, target, state);
    const bool found = search.run();
    result.nodes_explored = state.nodes;
    if (state.out_of_budget) {
      result.value = result.witness.size();
      result.status = SearchStatus::budget_exhausted;
      return result;
    }
    if (found) {
      result.witness = search.solution();
      break;
    }
  }
  result.nodes_explored = state.nodes;
  result.value = result.witness.size();
  result.status = SearchStatus::proven;
  return result;
}

// Minimum connected dominating set size of Q_n.  Same deepening scheme over
// the connected-growth search; the incumbent comes from connecting the greedy
// dominating set's star forest.
inline ExactResult exact_gamma_c(int n, const SearchBudget& budget = {}) {
  check_dimension(n);
  ExactResult result;
  result.n = n;
  result.parameter = "gamma_c";
  if (n == 1) {  // {0} covers both vertices of Q_1
    result.value = 1;
    result.witness = VertexSet(1);
    result.witness.insert(0);
    result.nodes_explored = 0;
    return result;
  }
  result.witness = connect_stars(star_forest(greedy_dominating(n)));

  const std::uint64_t lb = *lower_bounds(n).gamma_c_lower;
  auto state = detail::make_state(budget);
  for (std::uint64_t target = lb; target < result.witness.size(); ++target) {
    detail::GammaConnectedSearch search(n, target, state);
    const bool found = search.run();
    result.nodes_explored = state.nodes;
    if (state.out_of_budget) {
      result.value = result.witness.size();
      result.status = SearchStatus::budget_exhausted;
      return result;
    }
    if (found) {
      result.witness = search.solution();
      break;
    }
  }
  result.nodes_explored = state.nodes;
  result.value = result.witness.size();
  result.status = SearchStatus::proven;
  return result;
}

}  // namespace cubedom
