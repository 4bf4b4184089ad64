#pragma once

#include <vector>

namespace paclab::oracle {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double value = 0;
  std::vector<double> x;
};

// Maximize c.x subject to a x <= b and x >= 0, dense two-phase simplex with
// Bland-style tie-breaking. Throws solver-failure past the pivot cap.
LpResult solve_lp(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double> c);

}  // namespace paclab::oracle
