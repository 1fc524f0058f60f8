#include <algorithm>
#include <string>

#include "detail.hpp"
#include "leafspan/errors.hpp"

namespace leafspan {

namespace {

class PathSearch {
 public:
  PathSearch(const Graph& g, std::int64_t budget)
      : g_(g), visited_(g.vertex_count(), false), budget_(budget) {}

  std::optional<std::vector<Vertex>> run() {
    const int n = g_.vertex_count();
    if (n == 0) return std::nullopt;
    if (!is_connected(g_)) return std::nullopt;
    // Low-degree vertices are the likeliest endpoints.
    std::vector<Vertex> starts(n);
    for (Vertex v = 0; v < n; ++v) starts[v] = v;
    std::stable_sort(starts.begin(), starts.end(),
                     [this](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
    for (Vertex s : starts) {
      path_.assign(1, s);
      visited_[s] = true;
      if (extend()) return path_;
      visited_[s] = false;
    }
    return std::nullopt;
  }

 private:
  int free_degree(Vertex v) const {
    int d = 0;
    for (Vertex w : g_.neighbors(v)) d += !visited_[w];
    return d;
  }

  // The unvisited vertices, together with the path end, must be able to
  // finish a path: connected, and at most one of them a forced endpoint.
  bool feasible(Vertex end) const {
    const int n = g_.vertex_count();
    std::vector<bool> keep(n);
    int forced_ends = 0;
    for (Vertex v = 0; v < n; ++v) {
      keep[v] = !visited_[v] || v == end;
      if (visited_[v]) continue;
      int avail = 0;
      for (Vertex w : g_.neighbors(v)) avail += (!visited_[w] || w == end);
      if (avail == 0) return false;
      if (avail == 1 && ++forced_ends > 1) return false;
    }
    return is_connected_induced(g_, keep);
  }

  bool extend() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("hamiltonian path search exceeded budget of " + std::to_string(budget_));
    }
    if (static_cast<int>(path_.size()) == g_.vertex_count()) return true;
    const Vertex end = path_.back();
    if (!feasible(end)) return false;

    std::vector<Vertex> next;
    for (Vertex w : g_.neighbors(end)) {
      if (!visited_[w]) next.push_back(w);
    }
    std::stable_sort(next.begin(), next.end(),
                     [this](Vertex a, Vertex b) { return free_degree(a) < free_degree(b); });
    for (Vertex w : next) {
      visited_[w] = true;
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      visited_[w] = false;
    }
    return false;
  }

  const Graph& g_;
  std::vector<bool> visited_;
  std::vector<Vertex> path_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g, std::int64_t budget) {
  return PathSearch(g, budget).run();
}

namespace detail {

SpanningTree path_tree(const GraphPtr& g, const std::vector<Vertex>& path) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
  return SpanningTree(g, std::move(edges));
}

}  // namespace detail

}  // namespace leafspan
