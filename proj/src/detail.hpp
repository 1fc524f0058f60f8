#pragma once

#include <functional>

#include "leafspan/spectrum.hpp"

namespace leafspan::detail {

// Spanning-tree enumeration that stops as soon as `visitor` returns false.
std::int64_t enumerate_until(const GraphPtr& g, std::int64_t budget,
                             const std::function<bool(const SpanningTree&)>& visitor);

// Spanning tree built from a vertex sequence where consecutive vertices are
// adjacent.
SpanningTree path_tree(const GraphPtr& g, const std::vector<Vertex>& path);

}  // namespace leafspan::detail
