#pragma once

#include <cstdint>
#include <vector>

#include "paclab/oig/graph.hpp"

namespace paclab::oig {

// Fractional orientation minimizing the maximum out-degree. Each edge {u,v}
// splits one unit of mass between its endpoints; mass_from_u[i] is the share
// charged to edges[i].u, which is also the probability of predicting the
// label on the v side when the u side is the truth. The optimum value is an
// exact rational with denominator at most the vertex count; it is recovered
// by binary search on a V^2 grid followed by a denominator scan, and the
// returned masses come from one exact feasibility flow at that rational.
struct FractionalOrientation {
  std::int64_t value_num = 0;
  std::int64_t value_den = 1;
  double value = 0;
  std::vector<double> mass_from_u;  // per edge
  std::vector<double> out_degree;   // per vertex
};

FractionalOrientation min_max_fractional_orientation(const OigGraph& g);

// Maximum of edges(S) / |S| over nonempty vertex subsets, as an exact reduced
// rational with one maximizing subset. Exhaustive scan up to 20 vertices;
// parametric min-cut beyond that, or always when force_flow is set (the two
// routes cross-check each other in tests).
struct DensestResult {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::vector<std::size_t> witness;
};

DensestResult densest_subgraph(const OigGraph& g, bool force_flow = false);

// The fractional optimum always equals the densest-subgraph density.
struct DualityReport {
  std::int64_t orient_num = 0, orient_den = 1;
  std::int64_t dens_num = 0, dens_den = 1;
  bool equal = false;
};

DualityReport duality_check(const OigGraph& g, bool force_flow = false);

// Smallest maximum out-degree over whole-edge orientations, via feasibility
// flows (equals the fractional optimum rounded up).
std::int64_t min_max_integral_orientation(const OigGraph& g);

// Maximum out-degree of every whole-edge orientation, one per bitmask (bit i
// set sends edge i's unit to edges[i].u). Throws enumeration-cap-exceeded
// when the graph has more than max_edges edges.
std::vector<std::int64_t> enumerate_orientation_values(
    const OigGraph& g, std::size_t max_edges = 18);

// Orientation of the dim-cube by coordinate parity: the edge flipping the
// r-th coordinate (1-based, in sorted point order) points toward the endpoint
// whose label-sum parity matches r mod 2. Every vertex with odd parity ends
// with out-degree floor(dim/2) and every even vertex ceil(dim/2), so this is
// a whole-edge orientation meeting the integral optimum for even dim.
struct ParityOrientation {
  std::size_t dim = 0;
  std::vector<OigEdge> edges;          // u < v are the cube masks
  std::vector<std::uint8_t> toward_u;  // 1 when the head is u
  std::vector<std::int64_t> out_degree;
};

ParityOrientation parity_orientation(std::size_t dim);

// Head label at the queried coordinate under the parity orientation:
// labels_parity is the label sum of the remaining points mod 2 and
// rank_1based the query's position among the sorted distinct points.
std::uint8_t parity_predict(unsigned labels_parity, std::size_t rank_1based);

}  // namespace paclab::oig
