#include <numeric>
#include <string>

#include "leafspan/errors.hpp"
#include "leafspan/spectrum.hpp"

namespace leafspan {

namespace detail {

// Backtracking over edges in index order. Invariant: the included edges form
// a forest, and included + undecided edges span the graph.
class TreeEnumerator {
 public:
  TreeEnumerator(const GraphPtr& g, std::int64_t budget,
                 const std::function<bool(const SpanningTree&)>& visitor)
      : graph_(g),
        edges_(g->edges().begin(), g->edges().end()),
        state_(edges_.size(), kUndecided),
        parent_(g->vertex_count()),
        size_(g->vertex_count(), 1),
        budget_(budget),
        visitor_(visitor) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::int64_t run() {
    const int n = graph_->vertex_count();
    if (n == 0) throw InvalidInput("empty graph has no spanning tree");
    if (!is_connected(*graph_)) throw InvalidInput("graph is disconnected; no spanning tree");
    recurse(0, 0);
    return count_;
  }

 private:
  enum : char { kUndecided, kIncluded, kExcluded };

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Union by size without compression so the merge can be undone.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return b;
  }

  void undo(int child) {
    const int root = parent_[child];
    size_[root] -= size_[child];
    parent_[child] = child;
  }

  // Whether the graph minus excluded edges and minus edge `skip` spans.
  bool spans_without(std::size_t skip) {
    const int n = graph_->vertex_count();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    auto f = [&p](int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    };
    int comps = n;
    for (std::size_t i = 0; i < edges_.size() && comps > 1; ++i) {
      if (i == skip || state_[i] == kExcluded) continue;
      int a = f(edges_[i].u);
      int b = f(edges_[i].v);
      if (a != b) {
        p[a] = b;
        --comps;
      }
    }
    return comps == 1;
  }

  void emit() {
    if (++count_ > budget_) {
      throw BudgetExceeded("spanning tree enumeration exceeded budget of " + std::to_string(budget_));
    }
    std::vector<Edge> tree;
    tree.reserve(graph_->vertex_count() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (state_[i] == kIncluded) tree.push_back(edges_[i]);
    }
    if (!visitor_(SpanningTree::trusted(graph_, std::move(tree)))) stopped_ = true;
  }

  void recurse(std::size_t i, int included) {
    if (stopped_) return;
    if (included == graph_->vertex_count() - 1) {
      emit();
      return;
    }
    // Spanning invariant guarantees i < m here.
    const Edge& e = edges_[i];
    const bool joins = find(e.u) != find(e.v);
    if (joins) {
      state_[i] = kIncluded;
      const int child = unite(e.u, e.v);
      recurse(i + 1, included + 1);
      undo(child);
      state_[i] = kUndecided;
      if (stopped_) return;
    }
    // A bridge of the remaining graph must be taken; skip only non-bridges.
    if (!joins || spans_without(i)) {
      state_[i] = kExcluded;
      recurse(i + 1, included);
      state_[i] = kUndecided;
    }
  }

  GraphPtr graph_;
  std::vector<Edge> edges_;
  std::vector<char> state_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::int64_t budget_;
  const std::function<bool(const SpanningTree&)>& visitor_;
  std::int64_t count_ = 0;
  bool stopped_ = false;
};

std::int64_t enumerate_until(const GraphPtr& g, std::int64_t budget,
                             const std::function<bool(const SpanningTree&)>& visitor) {
  return TreeEnumerator(g, budget, visitor).run();
}

}  // namespace detail

std::int64_t enumerate_spanning_trees(const GraphPtr& g,
                                      const std::function<void(const SpanningTree&)>& visitor,
                                      std::int64_t budget) {
  std::function<bool(const SpanningTree&)> wrapped = [&visitor](const SpanningTree& t) {
    visitor(t);
    return true;
  };
  return detail::enumerate_until(g, budget, wrapped);
}

LeafSpectrum leaf_spectrum_oracle(const GraphPtr& g, std::int64_t budget) {
  LeafSpectrum spectrum;
  std::set<int> seen;
  enumerate_spanning_trees(
      g,
      [&](const SpanningTree& t) {
        if (seen.insert(t.leaf_count()).second) spectrum.witnesses.emplace(t.leaf_count(), t);
      },
      budget);
  spectrum.min_leaves = *seen.begin();
  spectrum.max_leaves = *seen.rbegin();
  spectrum.exhaustive = std::move(seen);
  return spectrum;
}

}  // namespace leafspan
