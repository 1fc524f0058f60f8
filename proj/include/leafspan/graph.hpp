#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace leafspan {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Normalizes orientation; throws InvalidInput on a loop.
  Edge(Vertex a, Vertex b);

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Sorted, deduplicated, normalized.
  std::span<const Edge> edges() const { return edges_; }
  /// Sorted neighbor list of v.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  /// Position of e in edges(), if present.
  std::optional<int> edge_index(const Edge& e) const;

  bool is_complete() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Builds a normalized graph. Duplicates (in either orientation) are merged.
/// Throws InvalidInput on out-of-range endpoints or loops.
Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list);
Graph build_graph(int n, std::span<const Edge> edge_list);

bool is_connected(const Graph& g);

/// Connectivity of the subgraph induced by `keep` (true = present).
bool is_connected_induced(const Graph& g, const std::vector<bool>& keep);

/// Every open neighborhood induces a connected subgraph. A vertex with an
/// empty neighborhood makes the answer false when n > 1.
bool is_locally_connected(const Graph& g);

/// Vertex connectivity via unit-capacity max flow on the split graph. A
/// complete graph K_n has connectivity n - 1.
int vertex_connectivity(const Graph& g);

/// True iff no vertex cut of size < k exists (and n > k, unless complete).
bool vertex_connectivity_at_least(const Graph& g, int k);

}  // namespace leafspan
