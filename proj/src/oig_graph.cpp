#include "paclab/oig/graph.hpp"

#include <algorithm>

#include "paclab/core/error.hpp"

namespace paclab::oig {

OigGraph build_oig_graph(BehaviorSet bs) {
  OigGraph g;
  g.base = std::move(bs);
  const auto& behaviors = g.base.behaviors;
  std::size_t q = g.base.points.points.size();
  for (std::size_t a = 0; a < behaviors.size(); ++a) {
    for (std::size_t j = 0; j < q; ++j) {
      if (g.base.points.multiplicity[j] != 1) continue;
      core::BehaviorMask bit = core::BehaviorMask{1} << j;
      if (behaviors[a] & bit) continue;  // count each pair from its 0 side
      core::BehaviorMask flipped = behaviors[a] | bit;
      auto it = std::lower_bound(behaviors.begin(), behaviors.end(), flipped);
      if (it == behaviors.end() || *it != flipped) continue;
      auto b = static_cast<std::size_t>(it - behaviors.begin());
      g.edges.push_back({a, b, j});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const OigEdge& x, const OigEdge& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  return g;
}

std::size_t max_degree(const OigGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  std::size_t best = 0;
  for (const auto& e : g.edges) {
    best = std::max(best, ++deg[e.u]);
    best = std::max(best, ++deg[e.v]);
  }
  return best;
}

OigGraph hypercube_graph(std::size_t dim) {
  if (dim > 16) throw Error("invalid-parameters: hypercube dim > 16");
  BehaviorSet bs;
  for (std::size_t j = 0; j < dim; ++j) {
    bs.points.points.push_back({0, static_cast<std::int64_t>(j), 0});
    bs.points.multiplicity.push_back(1);
  }
  bs.points.total = dim;
  bs.behaviors.resize(std::size_t{1} << dim);
  for (std::size_t m = 0; m < bs.behaviors.size(); ++m) bs.behaviors[m] = m;
  return build_oig_graph(std::move(bs));
}

}  // namespace paclab::oig
