#pragma once

#include <cstdint>
#include <vector>

#include "paclab/oig/behavior.hpp"

namespace paclab::oig {

// Undirected edge between behavior indices u < v, which differ in exactly the
// one collapsed coordinate `coord`.
struct OigEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t coord = 0;
};

// One-inclusion graph of a projection. Vertices are the distinct behaviors;
// an edge joins two behaviors that differ at exactly one coordinate, and only
// when that coordinate holds a single copy of its point: repeated points pin
// their label once any one copy is revealed, so no prediction is ever forced
// across them.
struct OigGraph {
  BehaviorSet base;
  std::vector<OigEdge> edges;  // sorted by (u, v)

  std::size_t vertex_count() const { return base.behaviors.size(); }
};

OigGraph build_oig_graph(BehaviorSet bs);

// Max degree over vertices; 0 for edgeless graphs.
std::size_t max_degree(const OigGraph& g);

// Full hypercube projection helper for tests: the graph on all 2^dim masks
// over dim fresh points. dim <= 16.
OigGraph hypercube_graph(std::size_t dim);

}  // namespace paclab::oig
