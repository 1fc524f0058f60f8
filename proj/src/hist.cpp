#include <string>

#include "leafspan/errors.hpp"
#include "leafspan/spectrum.hpp"

namespace leafspan {

namespace {

// Grows a rooted tree breadth-first: each vertex, when dequeued, picks its
// children among the neighbors not yet in the tree. Every spanning tree
// arises exactly once this way (its vertices enter through their parents),
// so the search is exhaustive. A non-root vertex may not take exactly one
// child and the root may not take exactly two.
class HistSearch {
 public:
  HistSearch(const Graph& g, std::int64_t budget)
      : g_(g), in_tree_(g.vertex_count(), false), budget_(budget) {}

  std::optional<std::vector<Edge>> run() {
    const int n = g_.vertex_count();
    if (n == 0 || !is_connected(g_)) return std::nullopt;
    order_.push_back(0);
    in_tree_[0] = true;
    placed_ = 1;
    if (process(0)) return edges_;
    return std::nullopt;
  }

 private:
  // Unplaced vertices must be reachable, through unplaced vertices, from a
  // tree vertex that has not chosen its children yet.
  bool can_still_span(std::size_t next) const {
    const int n = g_.vertex_count();
    if (placed_ == n) return true;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack;
    int reached = 0;
    for (std::size_t i = next; i < order_.size(); ++i) {
      for (Vertex w : g_.neighbors(order_[i])) {
        if (!in_tree_[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex w : g_.neighbors(v)) {
        if (!in_tree_[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return reached == n - placed_;
  }

  bool process(std::size_t idx) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("HIST search exceeded budget of " + std::to_string(budget_));
    }
    const int n = g_.vertex_count();
    if (placed_ == n) return true;  // remaining vertices become leaves
    if (idx >= order_.size()) return false;
    if (!can_still_span(idx)) return false;

    const Vertex v = order_[idx];
    std::vector<Vertex> free;
    for (Vertex w : g_.neighbors(v)) {
      if (!in_tree_[w]) free.push_back(w);
    }
    const bool root = idx == 0;
    const int k = static_cast<int>(free.size());
    // Larger child sets first: HISTs are leafy.
    for (int count = k; count >= 0; --count) {
      if (root ? (count == 0 || count == 2) : count == 1) continue;
      if (choose(idx, free, 0, count)) return true;
    }
    return false;
  }

  // Picks `remaining` more children of order_[idx] from free[from..].
  bool choose(std::size_t idx, const std::vector<Vertex>& free, std::size_t from, int remaining) {
    if (remaining == 0) return process(idx + 1);
    const Vertex v = order_[idx];
    for (std::size_t i = from; i + remaining <= free.size(); ++i) {
      const Vertex w = free[i];
      in_tree_[w] = true;
      ++placed_;
      order_.push_back(w);
      edges_.emplace_back(v, w);
      if (choose(idx, free, i + 1, remaining - 1)) return true;
      edges_.pop_back();
      order_.pop_back();
      --placed_;
      in_tree_[w] = false;
    }
    return false;
  }

  const Graph& g_;
  std::vector<bool> in_tree_;
  std::vector<Vertex> order_;
  std::vector<Edge> edges_;
  int placed_ = 0;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
};

}  // namespace

std::optional<SpanningTree> find_hist(const GraphPtr& g, std::int64_t budget) {
  auto edges = HistSearch(*g, budget).run();
  if (!edges) return std::nullopt;
  return SpanningTree(g, std::move(*edges));
}

}  // namespace leafspan
