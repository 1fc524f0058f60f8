#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "leafspan/exchange.hpp"
#include "leafspan/graph.hpp"
#include "leafspan/spanning_tree.hpp"

namespace leafspan {

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

inline constexpr std::int64_t kDefaultTreeBudget = 10'000'000;
inline constexpr std::int64_t kDefaultSearchBudget = 500'000'000;

/// Work limits for the exact solvers. Exceeding any of them throws
/// BudgetExceeded.
struct Budgets {
  std::int64_t trees = kDefaultTreeBudget;    ///< spanning trees enumerated
  std::int64_t search = kDefaultSearchBudget;  ///< backtracking nodes
};

/// L(G) as an interval, with witness trees keyed by leaf count.
struct LeafSpectrum {
  int min_leaves = 0;
  int max_leaves = 0;
  std::map<int, SpanningTree> witnesses;
  /// Every leaf count seen by exhaustive enumeration (oracle only).
  std::optional<std::set<int>> exhaustive;

  /// True when `exhaustive` is absent or equals {min, ..., max}.
  bool contiguous() const;
};

/// Connected dominating set; the stems of a spanning tree form one.
struct StemSet {
  std::vector<Vertex> vertices;
};

bool is_connected_dominating_set(const Graph& g, const std::vector<Vertex>& vertices);

struct LeafWitness {
  int leaves;
  SpanningTree tree;
};

/// Calls `visitor` once per spanning tree (any order). Contraction/deletion
/// backtracking: an edge is skipped only when the rest still spans, and
/// taken only when it joins two components, so every leaf of the search is a
/// tree. Returns the number of trees.
std::int64_t enumerate_spanning_trees(const GraphPtr& g,
                                      const std::function<void(const SpanningTree&)>& visitor,
                                      std::int64_t budget = kDefaultTreeBudget);

/// Exhaustive L(G) with a witness for every achieved leaf count.
LeafSpectrum leaf_spectrum_oracle(const GraphPtr& g, std::int64_t budget = kDefaultTreeBudget);

/// Hamiltonian path by fail-first backtracking; nullopt when none exists.
std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g,
                                                    std::int64_t budget = kDefaultSearchBudget);

LeafWitness min_leaf_exact(const GraphPtr& g, const Budgets& budgets = {});

/// Minimum connected dominating set by size-increasing enumeration of
/// connected vertex subsets. Requires a connected graph with n >= 3.
StemSet min_connected_dominating_set(const Graph& g, std::int64_t budget = kDefaultSearchBudget);

/// n - |minimum CDS|, with the tree from tree_from_stems as witness.
LeafWitness max_leaf_exact(const GraphPtr& g, std::int64_t budget = kDefaultSearchBudget);

/// Spanning tree whose stems all lie in `stems`: a BFS tree of the induced
/// subgraph plus every other vertex hung on its smallest-index neighbor in
/// the set. Throws InvalidInput unless `stems` is a connected dominating set.
SpanningTree tree_from_stems(const GraphPtr& g, const StemSet& stems);

/// Endpoints of L(G) with witnesses. Contiguity fills in the rest.
LeafSpectrum compute_spectrum(const GraphPtr& g, const Budgets& budgets = {});

/// A spanning tree with exactly k leaves, taken from the exchange trace
/// between the min and max witnesses. Throws Infeasible if k is outside.
SpanningTree find_tree_with_k_leaves(const LeafSpectrum& spectrum, int k);
SpanningTree find_tree_with_k_leaves(const GraphPtr& g, int k, const Budgets& budgets = {});

/// Spanning tree with no vertex of degree 2, or nullopt when the search
/// proved none exists. Throws BudgetExceeded when inconclusive.
std::optional<SpanningTree> find_hist(const GraphPtr& g, std::int64_t budget = kDefaultSearchBudget);

/// A subtree of the host given by its edge list, with its stem and leaf
/// counts (stems: degree >= 2; leaves: degree 1).
struct Subtree {
  std::vector<Edge> edges;
  int stems = 0;
  int leaves = 0;
  /// Leaves hung off the stem set, as opposed to leaves of the stem tree.
  int attached = 0;
};

/// Tree on the connected set `stems` (parent = earliest-listed neighbor),
/// plus every vertex adjacent to the set attached as a leaf.
Subtree maximal_leaf_subtree(const Graph& g, const std::vector<Vertex>& stems);

struct StemLeafReport {
  std::int64_t trials = 0;
  std::int64_t violations = 0;  ///< samples with leaves > 2 * stems + 4
  int min_slack = 0;            ///< smallest 2 * stems + 4 - leaves seen
  int max_slack = 0;
  std::int64_t tight = 0;       ///< samples with slack exactly 0
};

/// Samples random subtrees of a 6-regular graph (connected stem set grown by
/// uniform frontier expansion, then maximal leaf attachment) and checks
/// leaves <= 2 * stems + 4. Deterministic in (trials, seed). Throws
/// InvalidInput if g is not 6-regular.
StemLeafReport check_stem_leaf_bound(const Graph& g, std::int64_t trials, std::uint64_t seed);

}  // namespace leafspan
