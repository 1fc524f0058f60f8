#include "leafspan/constructions.hpp"

#include <stdexcept>

#include "leafspan/errors.hpp"

namespace leafspan {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("generator invariant failed: " + what);
}

void require_plane_triangulation_count(const Graph& g) {
  require(g.edge_count() == 3 * g.vertex_count() - 6, "|E| = 3n - 6");
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::gk:
      return "gk";
    case Family::counterexample:
      return "counterexample";
    case Family::torus:
      return "torus";
    case Family::platonic:
      return "platonic";
  }
  return "unknown";
}

LabeledGraph gen_gk(int k, bool verify_connectivity) {
  if (k < 2) throw InvalidInput("G_k needs k >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j < 4; ++j) {
      edges.emplace_back(gk_vertex(i, j), gk_vertex(i, j + 1));
      if (i < k) {
        edges.emplace_back(gk_vertex(i, j), gk_vertex(i + 1, j));
        edges.emplace_back(gk_vertex(i, j), gk_vertex(i + 1, j + 1));
      }
    }
  }
  edges.emplace_back(gk_vertex(1, 1), gk_vertex(1, 3));
  edges.emplace_back(gk_vertex(k, 1), gk_vertex(k, 3));

  LabeledGraph out{share(build_graph(4 * k, edges)), {}, Family::gk};
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j < 4; ++j) out.labels.push_back("v" + std::to_string(i) + "_" + std::to_string(j));
  }
  require_plane_triangulation_count(*out.graph);
  require(static_cast<int>(edges.size()) == out.graph->edge_count(), "no duplicate edges");
  if (verify_connectivity) require(vertex_connectivity_at_least(*out.graph, 4), "4-connected");
  return out;
}

Counterexample gen_counterexample() {
  // v1..v8 map to 0..7.
  auto e = [](int a, int b) { return Edge(a - 1, b - 1); };
  const std::vector<Edge> graph_edges{e(1, 2), e(1, 3), e(1, 4), e(1, 5), e(1, 6), e(2, 7),
                                      e(3, 7), e(4, 8), e(5, 8), e(6, 7), e(6, 8)};
  LabeledGraph g{share(build_graph(8, graph_edges)), {}, Family::counterexample};
  for (int v = 1; v <= 8; ++v) g.labels.push_back("v" + std::to_string(v));

  SpanningTree t(g.graph, {e(1, 6), e(2, 7), e(3, 7), e(4, 8), e(5, 8), e(6, 7), e(6, 8)});
  SpanningTree t_max(g.graph, {e(1, 2), e(1, 3), e(1, 4), e(1, 5), e(1, 6), e(6, 7), e(6, 8)});
  require(t.leaf_count() == 5, "l(T) = 5");
  require(t_max.leaf_count() == 6, "l(T') = 6");
  require(max_leaf_exact(g.graph).leaves == 6, "T' is maximum-leaf");
  return {std::move(g), std::move(t), std::move(t_max)};
}

LabeledGraph gen_torus_grid(int a, int b) {
  if (a < 3 || b < 3) throw InvalidInput("torus grid needs a, b >= 3");
  auto id = [a, b](int x, int y) { return ((x % a + a) % a) * b + ((y % b + b) % b); };
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) {
      edges.emplace_back(id(x, y), id(x + 1, y));
      edges.emplace_back(id(x, y), id(x, y + 1));
      edges.emplace_back(id(x, y), id(x + 1, y + 1));
    }
  }
  LabeledGraph out{share(build_graph(a * b, edges)), {}, Family::torus};
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) out.labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  const Graph& g = *out.graph;
  require(g.edge_count() == 3 * g.vertex_count(), "|E| = 3n");
  for (Vertex v = 0; v < g.vertex_count(); ++v) require(g.degree(v) == 6, "6-regular");
  return out;
}

LabeledGraph gen_platonic(std::string_view name) {
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  if (name == "tetrahedron") {
    n = 4;
    edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  } else if (name == "octahedron") {
    // K_{2,2,2}: antipodal pairs {0,1}, {2,3}, {4,5}.
    n = 6;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (a / 2 != b / 2) edges.emplace_back(a, b);
      }
    }
  } else if (name == "icosahedron") {
    // Poles 0 and 11; upper ring 1..5, lower ring 6..10, lower i+5 sits
    // between upper i and upper i+1.
    n = 12;
    for (int i = 0; i < 5; ++i) {
      const int up = 1 + i;
      const int up_next = 1 + (i + 1) % 5;
      const int low = 6 + i;
      const int low_next = 6 + (i + 1) % 5;
      edges.emplace_back(0, up);
      edges.emplace_back(up, up_next);
      edges.emplace_back(up, low);
      edges.emplace_back(up_next, low);
      edges.emplace_back(low, low_next);
      edges.emplace_back(low, 11);
    }
  } else {
    throw InvalidInput("unknown platonic solid '" + std::string(name) +
                       "' (expected tetrahedron, octahedron or icosahedron)");
  }
  LabeledGraph out{share(build_graph(n, edges)), {}, Family::platonic};
  for (int v = 0; v < n; ++v) out.labels.push_back(std::string(name) + "_" + std::to_string(v));
  require_plane_triangulation_count(*out.graph);
  return out;
}

}  // namespace leafspan
