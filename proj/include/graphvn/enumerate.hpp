#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graphvn/graph.hpp"

namespace graphvn {

// Calls fn on every connected loopless multigraph with 2..max_vertices
// vertices, at most max_units edge units, and weights drawn (with
// repetition) from the given grid.  Vertex ids are "v0", "v1", ...
// Returns the number of graphs visited.
std::size_t for_each_small_graph(unsigned max_vertices, unsigned max_units,
                                 const std::vector<Scalar>& weight_grid,
                                 const std::function<void(const WeightedGraph&)>& fn);

// Deterministic pseudorandom connected multigraph: a random spanning tree
// plus extra units, weights p/q with p, q in 1..9.
WeightedGraph random_graph(std::uint64_t seed, unsigned max_vertices, unsigned max_units);

}  // namespace graphvn
