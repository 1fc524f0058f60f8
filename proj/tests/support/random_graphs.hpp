#pragma once

#include <random>

#include "leafspan/spanning_tree.hpp"
#include "leafspan/spectrum.hpp"

namespace leafspan::testing {

using Rng = std::mt19937_64;

/// Random spanning tree on a shuffled vertex order, plus each remaining pair
/// independently with probability p. Always connected.
Graph random_connected_graph(int n, double p, Rng& rng);

/// Kruskal over uniformly random edge weights.
SpanningTree random_spanning_tree(const GraphPtr& g, Rng& rng);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
/// Hub 0 joined to the cycle 1..rim.
Graph wheel_graph(int rim);
Graph petersen_graph();

}  // namespace leafspan::testing
