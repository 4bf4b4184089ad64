#pragma once

#include "paclab/oig/graph.hpp"

namespace paclab::oracle {

// Minimax fractional orientation value by linear programming over the edge
// splits: an independent route to the same optimum the combinatorial flow
// solver finds, kept separate so the two can cross-check each other.
double transductive_value_lp(const oig::OigGraph& g);

}  // namespace paclab::oracle
