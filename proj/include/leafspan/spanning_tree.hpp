#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

/// A spanning tree of a shared host graph. Validated on construction;
/// immutable afterwards.
class SpanningTree {
 public:
  /// Throws InvalidInput unless `edges` is a spanning tree of `*host`.
  SpanningTree(std::shared_ptr<const Graph> host, std::vector<Edge> edges);

  /// Skips validation. Callers must already know `edges` is a spanning tree.
  static SpanningTree trusted(std::shared_ptr<const Graph> host, std::vector<Edge> edges);

  const Graph& host() const { return *host_; }
  const std::shared_ptr<const Graph>& host_ptr() const { return host_; }

  int vertex_count() const { return host_->vertex_count(); }
  /// Sorted, normalized; exactly n - 1 entries.
  std::span<const Edge> edges() const { return edges_; }
  bool contains(const Edge& e) const;

  int degree(Vertex v) const { return degree_[v]; }
  std::span<const int> degrees() const { return degree_; }
  int leaf_count() const { return leaf_count_; }

  std::vector<Vertex> leaves() const;
  std::vector<Vertex> stems() const;

  /// Tree adjacency lists, built on demand.
  std::vector<std::vector<Vertex>> adjacency() const;

  /// T + in - out, without checking that `out` lies on the cycle of T + in.
  SpanningTree swapped(const Edge& in, const Edge& out) const;

  /// Reason `edges` fails to be a spanning tree of `host`, if any.
  static std::optional<std::string> check(const Graph& host, std::span<const Edge> edges);

  /// Same host object (or equal hosts) and same edge set.
  friend bool operator==(const SpanningTree& a, const SpanningTree& b) {
    return (a.host_ == b.host_ || *a.host_ == *b.host_) && a.edges_ == b.edges_;
  }

 private:
  SpanningTree() = default;
  void compute_degrees();

  std::shared_ptr<const Graph> host_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  int leaf_count_ = 0;
};

/// Unique cycle of T + e: starts with e, continues along the tree path from
/// e.v back to e.u; consecutive edges share a vertex.
/// Throws InvalidInput if e is already a tree edge or not a host edge.
std::vector<Edge> fundamental_cycle(const SpanningTree& t, const Edge& e);

inline int leaf_count(const SpanningTree& t) { return t.leaf_count(); }

}  // namespace leafspan
