#include <doctest.h>

#include "leafspan/constructions.hpp"
#include "leafspan/errors.hpp"
#include "leafspan/graph.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace leafspan;
using namespace leafspan::testing;

TEST_CASE("build_graph normalizes and deduplicates") {
  const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2);

  const Graph dup = build_graph(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(dup.edge_count() == 2);
  CHECK(dup.edges()[0] == Edge(0, 1));
  CHECK(dup.has_edge(2, 1));
  CHECK_FALSE(dup.has_edge(0, 2));
}

TEST_CASE("build_graph rejects loops and out-of-range endpoints") {
  CHECK_THROWS_AS(build_graph(2, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), InvalidInput);
  CHECK_THROWS_AS(build_graph(2, {{-1, 1}}), InvalidInput);
}

TEST_CASE("counterexample edge list builds an 8-vertex, 11-edge graph") {
  const Graph g = build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {2, 6}, {3, 7}, {4, 7}, {5, 6}, {5, 7}});
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 11);
}

TEST_CASE("adjacency and edge set agree") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_connected_graph(3 + trial % 8, 0.4, rng);
    int degree_sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      degree_sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) CHECK(g.edge_index(Edge(v, w)).has_value());
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("is_connected") {
  CHECK(is_connected(build_graph(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(*gen_gk(6).graph));
}

TEST_CASE("is_locally_connected") {
  CHECK(is_locally_connected(*gen_platonic("octahedron").graph));
  CHECK_FALSE(is_locally_connected(cycle_graph(6)));
  CHECK(is_locally_connected(*gen_gk(6).graph));
  CHECK_FALSE(is_locally_connected(build_graph(3, {{0, 1}})));
}

TEST_CASE("vertex connectivity on known graphs") {
  const Graph c4 = cycle_graph(4);
  CHECK(vertex_connectivity_at_least(c4, 2));
  CHECK_FALSE(vertex_connectivity_at_least(c4, 3));
  CHECK(vertex_connectivity_at_least(*gen_platonic("octahedron").graph, 4));
  CHECK(vertex_connectivity(complete_graph(5)) == 4);
  CHECK(vertex_connectivity(path_graph(4)) == 1);
  CHECK(vertex_connectivity(build_graph(4, {{0, 1}, {2, 3}})) == 0);
}

TEST_CASE("G_6 has minimum vertex cut 4") {
  const Graph g = *gen_gk(6).graph;
  CHECK(vertex_connectivity(g) == 4);
  CHECK(vertex_connectivity_at_least(g, 4));
  CHECK_FALSE(vertex_connectivity_at_least(g, 5));
}

TEST_CASE("vertex connectivity agrees with brute-force deletion for n <= 12") {
  Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 10;
    const double p = 0.2 + 0.6 * (trial % 7) / 6.0;
    const Graph g = random_connected_graph(n, p, rng);
    const int expected = brute_force_connectivity(g);
    CAPTURE(n);
    CHECK(vertex_connectivity(g) == expected);
    for (int k = 1; k <= 5; ++k) CHECK(vertex_connectivity_at_least(g, k) == (expected >= k));
  }
}
