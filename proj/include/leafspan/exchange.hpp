#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leafspan/spanning_tree.hpp"

namespace leafspan {

/// One edge exchange: add `edge_in`, remove `edge_out`.
struct ExchangeStep {
  Edge edge_in;
  Edge edge_out;
  int leaf_count_after = 0;

  friend bool operator==(const ExchangeStep&, const ExchangeStep&) = default;
};

/// A sequence of exchanges from `start`. leaf_profile[i] is the leaf count of
/// the i-th tree, so leaf_profile.size() == steps.size() + 1.
struct ExchangeTrace {
  SpanningTree start;
  std::vector<ExchangeStep> steps;
  std::vector<int> leaf_profile;

  /// All trees R_0 .. R_q. Each exchange is checked against the fundamental
  /// cycle; throws InvalidInput if a step is illegal.
  std::vector<SpanningTree> replay() const;
  SpanningTree final_tree() const;
  /// Largest |leaf_profile[i+1] - leaf_profile[i]|, 0 for an empty trace.
  int max_leaf_jump() const;
};

/// T + e_in - e_out. Requires e_in to be a non-tree host edge and e_out to lie
/// on the fundamental cycle of T + e_in (so the result is a spanning tree).
SpanningTree exchange_step(const SpanningTree& t, const Edge& e_in, const Edge& e_out);

/// Splits an exchange whose leaf count jumps by 2 into single-vertex-sharing
/// exchanges along the fundamental cycle. Returns the intermediate trees
/// ending with exchange_step(t, e_in, e_out); when the direct exchange moves
/// the leaf count by at most 1 the result is just that final tree.
///
/// The walk runs from e_in to e_out around whichever side of the cycle is
/// shorter. On a tie it goes toward the side whose first edge is the smaller
/// normalized pair.
std::vector<SpanningTree> refine_exchange(const SpanningTree& t, const Edge& e_in, const Edge& e_out);

/// Transforms `t` into `target` one exchange at a time. Edges of target
/// missing from t are inserted in ascending order; each removes the
/// nearest cycle edge outside target. Exchanges with a leaf jump of 2 are
/// refined, so consecutive profile entries differ by at most 1 and the
/// number of steps is at most floor(n/2) * (n-1).
ExchangeTrace transform_sequence(const SpanningTree& t, const SpanningTree& target);

enum class SearchStatus {
  found,         ///< a monotone trace was found
  none_exists,   ///< tree space reachable monotonically was fully explored
  depth_limit,   ///< frontier still open at max_depth
  budget_limit,  ///< node budget exhausted
};

struct MonotoneSearchResult {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<ExchangeTrace> trace;
  std::int64_t trees_visited = 0;
  int depth_reached = 0;
};

/// Breadth-first search over spanning trees of g for a path from t to target
/// where each step is a single exchange and the leaf count never decreases.
/// Requires leaf_count(t) <= leaf_count(target).
MonotoneSearchResult monotone_sequence_search(const Graph& g, const SpanningTree& t,
                                              const SpanningTree& target, int max_depth,
                                              std::int64_t node_budget = 1'000'000);

const char* to_string(SearchStatus s);

}  // namespace leafspan
