#include "leafspan/exchange.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>

#include "leafspan/errors.hpp"

namespace leafspan {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// The fundamental cycle read in one direction: walk[0] is the inserted edge,
// walk[x] and walk[x+1] share a vertex.
std::vector<Edge> oriented_walk(const std::vector<Edge>& cycle, bool forward) {
  if (forward) return cycle;
  std::vector<Edge> walk{cycle.front()};
  walk.insert(walk.end(), cycle.rbegin(), cycle.rend() - 1);
  return walk;
}

// Direction preference for reaching cycle position p (1 <= p < L).
bool prefer_forward(const std::vector<Edge>& cycle, std::size_t p) {
  const std::size_t len = cycle.size();
  const std::size_t fwd = p;
  const std::size_t bwd = len - p;
  if (fwd != bwd) return fwd < bwd;
  return cycle[1] < cycle.back();
}

std::size_t position_on_cycle(const std::vector<Edge>& cycle, const Edge& e_out) {
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    if (cycle[i] == e_out) return i;
  }
  throw InvalidInput("edge " + edge_str(e_out) + " is not on the fundamental cycle of " +
                     edge_str(cycle.front()) + "; removing it would disconnect the tree");
}

void check_insertable(const SpanningTree& t, const Edge& e_in) {
  if (!t.host().has_edge(e_in)) throw InvalidInput("edge " + edge_str(e_in) + " is not in the host graph");
  if (t.contains(e_in)) throw InvalidInput("edge " + edge_str(e_in) + " is already a tree edge");
}

// Steps along `walk` from position 0 to position `steps`.
void append_walk(const std::vector<Edge>& walk, std::size_t steps,
                 std::vector<ExchangeStep>& out_steps, std::vector<SpanningTree>* out_trees,
                 SpanningTree& current) {
  for (std::size_t x = 1; x <= steps; ++x) {
    current = current.swapped(walk[x - 1], walk[x]);
    out_steps.push_back({walk[x - 1], walk[x], current.leaf_count()});
    if (out_trees) out_trees->push_back(current);
  }
}

bool same_host(const SpanningTree& a, const SpanningTree& b) {
  return a.host_ptr() == b.host_ptr() || a.host() == b.host();
}

}  // namespace

SpanningTree exchange_step(const SpanningTree& t, const Edge& e_in, const Edge& e_out) {
  check_insertable(t, e_in);
  const auto cycle = fundamental_cycle(t, e_in);
  position_on_cycle(cycle, e_out);
  SpanningTree next = t.swapped(e_in, e_out);
#ifdef LEAFSPAN_VALIDATE_EXCHANGES
  if (auto err = SpanningTree::check(next.host(), next.edges())) throw std::logic_error(*err);
#endif
  return next;
}

std::vector<SpanningTree> refine_exchange(const SpanningTree& t, const Edge& e_in, const Edge& e_out) {
  check_insertable(t, e_in);
  const auto cycle = fundamental_cycle(t, e_in);
  const std::size_t p = position_on_cycle(cycle, e_out);
  SpanningTree direct = t.swapped(e_in, e_out);
  if (std::abs(direct.leaf_count() - t.leaf_count()) <= 1) return {direct};

  const bool forward = prefer_forward(cycle, p);
  const auto walk = oriented_walk(cycle, forward);
  const std::size_t steps = forward ? p : cycle.size() - p;
  std::vector<SpanningTree> trees;
  std::vector<ExchangeStep> unused;
  SpanningTree current = t;
  append_walk(walk, steps, unused, &trees, current);
  return trees;
}

ExchangeTrace transform_sequence(const SpanningTree& t, const SpanningTree& target) {
  if (!same_host(t, target)) throw InvalidInput("trees span different host graphs");

  ExchangeTrace trace{t, {}, {t.leaf_count()}};
  std::vector<Edge> missing;
  std::set_difference(target.edges().begin(), target.edges().end(), t.edges().begin(),
                      t.edges().end(), std::back_inserter(missing));

  SpanningTree current = t;
  for (const Edge& e_in : missing) {
    const auto cycle = fundamental_cycle(current, e_in);
    // First edge outside the target in each direction; take the nearer one.
    // target is acyclic, so such an edge exists.
    std::size_t first_fwd = 1;
    while (target.contains(cycle[first_fwd])) ++first_fwd;
    std::size_t first_bwd = cycle.size() - 1;
    while (target.contains(cycle[first_bwd])) --first_bwd;
    const std::size_t fwd_dist = first_fwd;
    const std::size_t bwd_dist = cycle.size() - first_bwd;
    const bool go_forward = fwd_dist != bwd_dist ? fwd_dist < bwd_dist : cycle[1] < cycle.back();
    const std::size_t best_pos = go_forward ? first_fwd : first_bwd;
    const Edge e_out = cycle[best_pos];
    const int before = current.leaf_count();
    SpanningTree direct = current.swapped(e_in, e_out);
    if (std::abs(direct.leaf_count() - before) <= 1) {
      current = std::move(direct);
      trace.steps.push_back({e_in, e_out, current.leaf_count()});
    } else {
      // Same side the removed edge was picked from, which is also the side
      // refine_exchange would walk.
      const auto walk = oriented_walk(cycle, go_forward);
      const std::size_t steps = go_forward ? fwd_dist : bwd_dist;
      append_walk(walk, steps, trace.steps, nullptr, current);
    }
  }
  for (const ExchangeStep& s : trace.steps) trace.leaf_profile.push_back(s.leaf_count_after);
  return trace;
}

std::vector<SpanningTree> ExchangeTrace::replay() const {
  std::vector<SpanningTree> trees{start};
  for (const ExchangeStep& s : steps) trees.push_back(exchange_step(trees.back(), s.edge_in, s.edge_out));
  return trees;
}

SpanningTree ExchangeTrace::final_tree() const {
  SpanningTree current = start;
  for (const ExchangeStep& s : steps) current = exchange_step(current, s.edge_in, s.edge_out);
  return current;
}

int ExchangeTrace::max_leaf_jump() const {
  int jump = 0;
  for (std::size_t i = 1; i < leaf_profile.size(); ++i) {
    jump = std::max(jump, std::abs(leaf_profile[i] - leaf_profile[i - 1]));
  }
  return jump;
}

MonotoneSearchResult monotone_sequence_search(const Graph& g, const SpanningTree& t,
                                              const SpanningTree& target, int max_depth,
                                              std::int64_t node_budget) {
  if (!same_host(t, target) || !(t.host() == g)) throw InvalidInput("trees span different host graphs");
  if (t.leaf_count() > target.leaf_count()) {
    throw InvalidInput("monotone search needs leaf_count(start) <= leaf_count(target)");
  }
  if (max_depth < 0 || node_budget <= 0) throw InvalidInput("max_depth and node budget must be positive");

  struct Node {
    SpanningTree tree;
    int parent;
    ExchangeStep step;
    int depth;
  };
  std::vector<Node> nodes{{t, -1, {}, 0}};
  std::map<std::vector<Edge>, int> seen;
  seen.emplace(std::vector<Edge>(t.edges().begin(), t.edges().end()), 0);

  MonotoneSearchResult result;
  auto build_trace = [&](int idx) {
    std::vector<ExchangeStep> rev;
    for (int i = idx; nodes[i].parent != -1; i = nodes[i].parent) rev.push_back(nodes[i].step);
    ExchangeTrace trace{t, {rev.rbegin(), rev.rend()}, {t.leaf_count()}};
    for (const auto& s : trace.steps) trace.leaf_profile.push_back(s.leaf_count_after);
    return trace;
  };

  bool frontier_cut = false;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    result.depth_reached = std::max(result.depth_reached, nodes[idx].depth);
    if (nodes[idx].tree == target) {
      result.status = SearchStatus::found;
      result.trace = build_trace(idx);
      result.trees_visited = static_cast<std::int64_t>(nodes.size());
      return result;
    }
    if (nodes[idx].depth == max_depth) {
      frontier_cut = true;
      continue;
    }
    const SpanningTree current = nodes[idx].tree;
    for (const Edge& e_in : g.edges()) {
      if (current.contains(e_in)) continue;
      const auto cycle = fundamental_cycle(current, e_in);
      for (std::size_t i = 1; i < cycle.size(); ++i) {
        SpanningTree next = current.swapped(e_in, cycle[i]);
        if (next.leaf_count() < current.leaf_count()) continue;
        std::vector<Edge> key(next.edges().begin(), next.edges().end());
        if (seen.contains(key)) continue;
        if (static_cast<std::int64_t>(nodes.size()) >= node_budget) {
          result.status = SearchStatus::budget_limit;
          result.trees_visited = static_cast<std::int64_t>(nodes.size());
          return result;
        }
        const int child = static_cast<int>(nodes.size());
        seen.emplace(std::move(key), child);
        nodes.push_back({std::move(next), idx, {e_in, cycle[i], 0}, nodes[idx].depth + 1});
        nodes.back().step.leaf_count_after = nodes.back().tree.leaf_count();
        queue.push_back(child);
      }
    }
  }
  result.status = frontier_cut ? SearchStatus::depth_limit : SearchStatus::none_exists;
  result.trees_visited = static_cast<std::int64_t>(nodes.size());
  return result;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none_exists:
      return "none_exists";
    case SearchStatus::depth_limit:
      return "depth_limit";
    case SearchStatus::budget_limit:
      return "budget_limit";
  }
  return "unknown";
}

}  // namespace leafspan
