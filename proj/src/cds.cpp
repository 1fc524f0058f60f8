#include <algorithm>
#include <string>

#include "detail.hpp"
#include "leafspan/errors.hpp"

namespace leafspan {

bool is_connected_dominating_set(const Graph& g, const std::vector<Vertex>& vertices) {
  const int n = g.vertex_count();
  if (vertices.empty()) return n == 0;
  std::vector<bool> in(n, false);
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) return false;
    in[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&in](Vertex w) { return in[w]; })) return false;
  }
  return is_connected_induced(g, in);
}

namespace {

// Enumerates connected vertex subsets of a fixed size whose smallest vertex
// is `root_`, each exactly once (extension sets as in ESU), and stops at the
// first one that dominates the graph.
class DominatingSubsetSearch {
 public:
  DominatingSubsetSearch(const Graph& g, std::int64_t budget)
      : g_(g), cover_(g.vertex_count(), 0), undominated_(g.vertex_count()), budget_(budget) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) max_closed_degree_ = std::max(max_closed_degree_, g.degree(v) + 1);
  }

  std::optional<std::vector<Vertex>> find_of_size(int size) {
    target_ = size;
    for (root_ = 0; root_ < g_.vertex_count(); ++root_) {
      add(root_);
      std::vector<Vertex> ext;
      for (Vertex w : g_.neighbors(root_)) {
        if (w > root_) ext.push_back(w);
      }
      const bool found = extend(ext);
      if (found) return chosen_;
      remove(root_);
    }
    return std::nullopt;
  }

 private:
  void add(Vertex v) {
    chosen_.push_back(v);
    undominated_ -= (cover_[v]++ == 0);
    for (Vertex w : g_.neighbors(v)) undominated_ -= (cover_[w]++ == 0);
  }

  void remove(Vertex v) {
    chosen_.pop_back();
    undominated_ += (--cover_[v] == 0);
    for (Vertex w : g_.neighbors(v)) undominated_ += (--cover_[w] == 0);
  }

  bool extend(std::vector<Vertex> ext) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("connected dominating set search exceeded budget of " + std::to_string(budget_));
    }
    const int slots = target_ - static_cast<int>(chosen_.size());
    if (slots == 0) return undominated_ == 0;
    // Each further vertex dominates at most its closed neighborhood.
    if (undominated_ > static_cast<long long>(slots) * max_closed_degree_) return false;

    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      // Extension for the branch through w: the rest of ext plus neighbors
      // of w that are neither chosen nor adjacent to a chosen vertex.
      std::vector<Vertex> next = ext;
      for (Vertex x : g_.neighbors(w)) {
        if (x > root_ && cover_[x] == 0) next.push_back(x);
      }
      add(w);
      if (extend(std::move(next))) return true;
      remove(w);
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> cover_;  // chosen vertices in the closed neighborhood
  long long undominated_;
  std::vector<Vertex> chosen_;
  int max_closed_degree_ = 1;
  int target_ = 0;
  Vertex root_ = 0;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
};

}  // namespace

StemSet min_connected_dominating_set(const Graph& g, std::int64_t budget) {
  const int n = g.vertex_count();
  if (n < 3) throw InvalidInput("connected dominating set search needs n >= 3");
  if (!is_connected(g)) throw InvalidInput("graph is disconnected");
  DominatingSubsetSearch search(g, budget);
  for (int size = 1; size <= n; ++size) {
    if (auto found = search.find_of_size(size)) {
      std::sort(found->begin(), found->end());
      return StemSet{std::move(*found)};
    }
  }
  throw std::logic_error("no connected dominating set found in a connected graph");
}

SpanningTree tree_from_stems(const GraphPtr& g, const StemSet& stems) {
  if (!is_connected_dominating_set(*g, stems.vertices)) {
    throw InvalidInput("stem set is not a connected dominating set");
  }
  const int n = g->vertex_count();
  std::vector<bool> in(n, false);
  for (Vertex v : stems.vertices) in[v] = true;
  const Vertex root = *std::min_element(stems.vertices.begin(), stems.vertices.end());

  std::vector<Edge> edges;
  std::vector<bool> reached(n, false);
  std::vector<Vertex> queue{root};
  reached[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g->neighbors(queue[head])) {
      if (in[w] && !reached[w]) {
        reached[w] = true;
        edges.emplace_back(queue[head], w);
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) continue;
    for (Vertex w : g->neighbors(v)) {
      if (in[w]) {
        edges.emplace_back(v, w);
        break;
      }
    }
  }
  return SpanningTree(g, std::move(edges));
}

LeafWitness max_leaf_exact(const GraphPtr& g, std::int64_t budget) {
  const int n = g->vertex_count();
  if (!is_connected(*g)) throw InvalidInput("graph is disconnected");
  if (n == 1) return {0, SpanningTree(g, {})};
  if (n == 2) return {2, SpanningTree(g, {Edge(0, 1)})};
  if (g->is_complete()) {
    std::vector<Edge> star;
    for (Vertex v = 1; v < n; ++v) star.emplace_back(0, v);
    return {n - 1, SpanningTree(g, std::move(star))};
  }
  const StemSet stems = min_connected_dominating_set(*g, budget);
  SpanningTree tree = tree_from_stems(g, stems);
  // Stems of any spanning tree form a CDS, so a minimum CDS leaves no vertex
  // of the set as a leaf.
  if (tree.leaf_count() != n - static_cast<int>(stems.vertices.size())) {
    throw std::logic_error("tree over a minimum CDS has unexpected leaf count");
  }
  return {tree.leaf_count(), std::move(tree)};
}

}  // namespace leafspan
