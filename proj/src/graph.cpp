#include "leafspan/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "leafspan/errors.hpp"

namespace leafspan {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw InvalidInput("loop edge at vertex " + std::to_string(a));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::optional<int> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::is_complete() const {
  const long long n = vertex_count();
  return static_cast<long long>(edge_count()) == n * (n - 1) / 2;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
  if (n < 0) throw InvalidInput("negative vertex count");
  Graph g;
  g.adjacency_.assign(n, {});
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    g.edges_.emplace_back(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list) {
  return build_graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

Graph build_graph(int n, std::span<const Edge> edge_list) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edge_list.size());
  for (const Edge& e : edge_list) pairs.emplace_back(e.u, e.v);
  return build_graph(n, pairs);
}

bool is_connected_induced(const Graph& g, const std::vector<bool>& keep) {
  const int n = g.vertex_count();
  int start = -1;
  int total = 0;
  for (int v = 0; v < n; ++v) {
    if (keep[v]) {
      ++total;
      if (start < 0) start = v;
    }
  }
  if (total <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (keep[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == total;
}

bool is_connected(const Graph& g) {
  return is_connected_induced(g, std::vector<bool>(g.vertex_count(), true));
}

bool is_locally_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> keep(n, false);
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty()) {
      if (n > 1) return false;
      continue;
    }
    for (Vertex w : nbrs) keep[w] = true;
    bool ok = is_connected_induced(g, keep);
    for (Vertex w : nbrs) keep[w] = false;
    if (!ok) return false;
  }
  return true;
}

namespace {

// Unit-capacity flow network on the split graph: vertex x becomes
// in = 2x, out = 2x + 1 joined by a capacity-1 arc.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * g.vertex_count(), -1) {
    for (Vertex x = 0; x < g.vertex_count(); ++x) add_arc(2 * x, 2 * x + 1, 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, kInf);
      add_arc(2 * e.v + 1, 2 * e.u, kInf);
    }
  }

  // Number of internally vertex-disjoint s-t paths, stopping at `limit`.
  int local_connectivity(Vertex s, Vertex t, int limit) {
    for (auto& a : arcs_) a.flow = 0;
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source);
      via[source] = -2;
      while (!q.empty() && via[sink] == -1) {
        int x = q.front();
        q.pop();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.cap - arc.flow > 0 && via[arc.to] == -1) {
            via[arc.to] = a;
            q.push(arc.to);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != source;) {
        int a = via[x];
        arcs_[a].flow += 1;
        arcs_[a ^ 1].flow -= 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 2;

  struct Arc {
    int to;
    int cap;
    int flow;
    int next;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, 0, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

int connectivity_capped(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (g.is_complete()) return std::max(0, n - 1);
  if (!is_connected(g)) return 0;
  SplitNetwork net(g);
  int best = std::min(cap, n - 1);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, net.local_connectivity(s, t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  return connectivity_capped(g, std::numeric_limits<int>::max());
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  return connectivity_capped(g, k) >= k;
}

}  // namespace leafspan
