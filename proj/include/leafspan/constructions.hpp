#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leafspan/spanning_tree.hpp"
#include "leafspan/spectrum.hpp"

namespace leafspan {

enum class Family { gk, counterexample, torus, platonic };

const char* to_string(Family f);

/// A generated graph with a human-readable label per vertex.
struct LabeledGraph {
  GraphPtr graph;
  std::vector<std::string> labels;  ///< labels[v] names vertex v
  Family family;
};

/// Vertex index of v^i_j in gen_gk (i in 1..k, j in 0..3).
inline Vertex gk_vertex(int i, int j) { return 4 * (i - 1) + ((j % 4) + 4) % 4; }

/// The extremal triangulation: k stacked 4-cycles C^1..C^k with rungs
/// v^i_j v^{i+1}_j, diagonals v^i_j v^{i+1}_{j+1}, and chords v^1_1 v^1_3,
/// v^k_1 v^k_3. n = 4k, m = 3n - 6. With verify_connectivity set the
/// generator also checks 4-connectivity (cost grows with k).
LabeledGraph gen_gk(int k, bool verify_connectivity = false);

/// The 8-vertex graph on which no exchange from T keeps its leaf count, with
/// T (5 leaves) and the maximum-leaf tree T' (6 leaves).
struct Counterexample {
  LabeledGraph graph;
  SpanningTree tree;
  SpanningTree max_leaf_tree;
};

Counterexample gen_counterexample();

/// Triangulated a x b torus: (x, y) joined to (x+1, y), (x, y+1), (x+1, y+1)
/// cyclically. 6-regular with m = 3n. Requires a, b >= 3.
LabeledGraph gen_torus_grid(int a, int b);

/// tetrahedron, octahedron or icosahedron.
LabeledGraph gen_platonic(std::string_view name);

}  // namespace leafspan
