#include "leafspan/spanning_tree.hpp"

#include <algorithm>
#include <numeric>

#include "leafspan/errors.hpp"

namespace leafspan {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Union-find with path halving; only used for validation.
struct Components {
  std::vector<int> parent;
  explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::optional<std::string> SpanningTree::check(const Graph& host, std::span<const Edge> edges) {
  const int n = host.vertex_count();
  if (n == 0) return "empty host graph";
  if (static_cast<int>(edges.size()) != n - 1) {
    return "expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size());
  }
  Components comps(n);
  for (const Edge& e : edges) {
    if (!host.has_edge(e)) return "edge " + edge_str(e) + " is not in the host graph";
    if (!comps.unite(e.u, e.v)) return "edge " + edge_str(e) + " closes a cycle";
  }
  // n - 1 edges and no cycle implies connected; check anyway.
  const int root = comps.find(0);
  for (int v = 1; v < n; ++v) {
    if (comps.find(v) != root) return "vertex " + std::to_string(v) + " is not spanned";
  }
  return std::nullopt;
}

SpanningTree::SpanningTree(std::shared_ptr<const Graph> host, std::vector<Edge> edges)
    : host_(std::move(host)), edges_(std::move(edges)) {
  if (!host_) throw InvalidInput("spanning tree without a host graph");
  std::sort(edges_.begin(), edges_.end());
  if (auto err = check(*host_, edges_)) throw InvalidInput("not a spanning tree: " + *err);
  compute_degrees();
}

SpanningTree SpanningTree::trusted(std::shared_ptr<const Graph> host, std::vector<Edge> edges) {
  SpanningTree t;
  t.host_ = std::move(host);
  t.edges_ = std::move(edges);
  std::sort(t.edges_.begin(), t.edges_.end());
  t.compute_degrees();
  return t;
}

void SpanningTree::compute_degrees() {
  degree_.assign(host_->vertex_count(), 0);
  for (const Edge& e : edges_) {
    ++degree_[e.u];
    ++degree_[e.v];
  }
  leaf_count_ = static_cast<int>(std::count(degree_.begin(), degree_.end(), 1));
}

bool SpanningTree::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<Vertex> SpanningTree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree_[v] == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> SpanningTree::stems() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree_[v] != 1) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Vertex>> SpanningTree::adjacency() const {
  std::vector<std::vector<Vertex>> adj(vertex_count());
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

SpanningTree SpanningTree::swapped(const Edge& in, const Edge& out) const {
  SpanningTree t;
  t.host_ = host_;
  t.edges_.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e != out) t.edges_.push_back(e);
  }
  t.edges_.insert(std::lower_bound(t.edges_.begin(), t.edges_.end(), in), in);
  t.degree_ = degree_;
  t.leaf_count_ = leaf_count_;
  auto bump = [&t](Vertex x, int delta) {
    const int before = t.degree_[x];
    const int after = before + delta;
    t.degree_[x] = after;
    t.leaf_count_ += (after == 1) - (before == 1);
  };
  bump(in.u, +1);
  bump(in.v, +1);
  bump(out.u, -1);
  bump(out.v, -1);
  return t;
}

std::vector<Edge> fundamental_cycle(const SpanningTree& t, const Edge& e) {
  if (!t.host().has_edge(e)) throw InvalidInput("edge " + edge_str(e) + " is not in the host graph");
  if (t.contains(e)) throw InvalidInput("edge " + edge_str(e) + " is already a tree edge");

  // BFS in the tree from e.v; then walk parents from e.u back to e.v.
  const auto adj = t.adjacency();
  std::vector<Vertex> parent(t.vertex_count(), -1);
  std::vector<Vertex> queue{e.v};
  parent[e.v] = e.v;
  for (std::size_t head = 0; head < queue.size() && parent[e.u] == -1; ++head) {
    Vertex x = queue[head];
    for (Vertex y : adj[x]) {
      if (parent[y] == -1) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  // Path e.u -> ... -> e.v, reversed so the cycle continues from e.v.
  std::vector<Edge> path;
  for (Vertex x = e.u; x != e.v; x = parent[x]) path.emplace_back(x, parent[x]);
  std::vector<Edge> cycle{e};
  cycle.insert(cycle.end(), path.rbegin(), path.rend());
  return cycle;
}

}  // namespace leafspan
