#include "paclab/oracle/transductive.hpp"

#include "paclab/core/error.hpp"
#include "paclab/oracle/lp.hpp"

namespace paclab::oracle {

double transductive_value_lp(const oig::OigGraph& g) {
  std::size_t e_cnt = g.edges.size();
  std::size_t v_cnt = g.vertex_count();
  if (e_cnt == 0) return 0.0;

  // Variables [x_0..x_{E-1}, t]: x_e is edge e's mass on its u endpoint.
  // Per vertex w: sum of incoming charges stays at or below t, where edge e
  // charges x_e to u and 1 - x_e to v; maximize -t.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t w = 0; w < v_cnt; ++w) {
    std::vector<double> row(e_cnt + 1, 0.0);
    double v_side = 0;
    for (std::size_t e = 0; e < e_cnt; ++e) {
      if (g.edges[e].u == w) row[e] += 1;
      if (g.edges[e].v == w) {
        row[e] -= 1;
        v_side += 1;
      }
    }
    row[e_cnt] = -1;
    a.push_back(std::move(row));
    b.push_back(-v_side);
  }
  for (std::size_t e = 0; e < e_cnt; ++e) {
    std::vector<double> row(e_cnt + 1, 0.0);
    row[e] = 1;
    a.push_back(std::move(row));
    b.push_back(1.0);
  }
  std::vector<double> c(e_cnt + 1, 0.0);
  c[e_cnt] = -1;
  LpResult res = solve_lp(std::move(a), std::move(b), std::move(c));
  if (res.status != LpStatus::optimal) {
    throw Error("solver-failure: orientation LP did not solve");
  }
  return -res.value;
}

}  // namespace paclab::oracle
