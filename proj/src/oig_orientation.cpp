#include "paclab/oig/orientation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "paclab/core/error.hpp"
#include "paclab/oig/maxflow.hpp"

namespace paclab::oig {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

// Does some fractional orientation keep every out-degree <= num / den?
// Network: source -> edge node (den), edge node -> both endpoints (den),
// vertex -> sink (num); feasible iff den units route per edge. Flow on the
// edge->u arc, over den, is the mass charged to u.
bool orientation_feasible(const OigGraph& g, i64 num, i64 den,
                          std::vector<i64>* to_u = nullptr) {
  std::size_t e_cnt = g.edges.size();
  std::size_t v_cnt = g.vertex_count();
  std::size_t source = 0, sink = 1 + e_cnt + v_cnt;
  MaxFlow mf(sink + 1);
  std::vector<std::size_t> u_arc(e_cnt);
  for (std::size_t i = 0; i < e_cnt; ++i) {
    mf.add_edge(source, 1 + i, den);
    u_arc[i] = mf.add_edge(1 + i, 1 + e_cnt + g.edges[i].u, den);
    mf.add_edge(1 + i, 1 + e_cnt + g.edges[i].v, den);
  }
  for (std::size_t v = 0; v < v_cnt; ++v) {
    mf.add_edge(1 + e_cnt + v, sink, num);
  }
  bool ok = mf.run(source, sink) == den * static_cast<i64>(e_cnt);
  if (ok && to_u) {
    to_u->resize(e_cnt);
    for (std::size_t i = 0; i < e_cnt; ++i) (*to_u)[i] = mf.flow_on(u_arc[i]);
  }
  return ok;
}

// The optimum lies in ((k-1)/grid, k/grid], an interval of length 1/V^2 that
// holds exactly one rational with denominator <= V; scan denominators for it.
struct Rational {
  i64 num = 0;
  i64 den = 1;
};

Rational scan_interval(i64 k, i64 grid, std::size_t v_cnt) {
  for (i64 q = 1; q <= static_cast<i64>(v_cnt); ++q) {
    i64 p = static_cast<i64>(static_cast<i128>(k) * q / grid);
    bool upper = static_cast<i128>(p) * grid <= static_cast<i128>(k) * q;
    bool lower = static_cast<i128>(k - 1) * q < static_cast<i128>(p) * grid;
    if (upper && lower) {
      i64 g = std::gcd(p, q);
      return {p / g, q / g};
    }
  }
  throw Error("solver-failure: no rational in the search interval");
}

}  // namespace

FractionalOrientation min_max_fractional_orientation(const OigGraph& g) {
  FractionalOrientation out;
  out.mass_from_u.assign(g.edges.size(), 0.0);
  out.out_degree.assign(g.vertex_count(), 0.0);
  if (g.edges.empty()) return out;

  std::size_t v_cnt = g.vertex_count();
  i64 grid = static_cast<i64>(v_cnt) * static_cast<i64>(v_cnt);
  i64 lo = 0;  // infeasible
  i64 hi = grid * static_cast<i64>(max_degree(g));  // feasible
  while (hi - lo > 1) {
    i64 mid = lo + (hi - lo) / 2;
    (orientation_feasible(g, mid, grid) ? hi : lo) = mid;
  }
  Rational r = scan_interval(hi, grid, v_cnt);

  std::vector<i64> to_u;
  if (!orientation_feasible(g, r.num, r.den, &to_u)) {
    throw Error("solver-failure: recovered optimum is infeasible");
  }
  out.value_num = r.num;
  out.value_den = r.den;
  out.value = static_cast<double>(r.num) / static_cast<double>(r.den);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    double mass = static_cast<double>(to_u[i]) / static_cast<double>(r.den);
    out.mass_from_u[i] = mass;
    out.out_degree[g.edges[i].u] += mass;
    out.out_degree[g.edges[i].v] += 1.0 - mass;
  }
  return out;
}

namespace {

DensestResult densest_exhaustive(const OigGraph& g) {
  std::size_t v_cnt = g.vertex_count();
  std::vector<std::uint32_t> adj(v_cnt, 0);
  for (const auto& e : g.edges) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  std::vector<std::int32_t> inside(std::size_t{1} << v_cnt, 0);
  DensestResult best;
  best.num = 0;
  best.den = 1;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << v_cnt); ++s) {
    std::uint32_t low = s & (~s + 1);
    std::uint32_t rest = s ^ low;
    auto idx = static_cast<std::size_t>(std::countr_zero(low));
    inside[s] = inside[rest] + std::popcount(adj[idx] & rest);
    i64 cnt = std::popcount(s);
    if (static_cast<i128>(inside[s]) * best.den >
        static_cast<i128>(best.num) * cnt) {
      best.num = inside[s];
      best.den = cnt;
      best.witness.clear();
      for (std::size_t v = 0; v < v_cnt; ++v) {
        if (s >> v & 1) best.witness.push_back(v);
      }
    }
  }
  if (best.witness.empty() && v_cnt > 0) best.witness.push_back(0);
  i64 g2 = std::gcd(best.num, best.den);
  best.num /= g2;
  best.den /= g2;
  return best;
}

// Parametric min-cut test: some subset has density > k/grid iff the cut drops
// below edges * V * grid. Source side caps are edges*grid into each vertex,
// vertex->sink edges*grid + 2k - deg*grid, and grid per direction across each
// edge; the source side of a strict cut is such a subset.
bool denser_than(const OigGraph& g, i64 k, i64 grid,
                 std::vector<std::size_t>* witness = nullptr) {
  std::size_t v_cnt = g.vertex_count();
  i64 e_cnt = static_cast<i64>(g.edges.size());
  std::vector<i64> deg(v_cnt, 0);
  for (const auto& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::size_t source = 0, sink = v_cnt + 1;
  MaxFlow mf(v_cnt + 2);
  for (std::size_t v = 0; v < v_cnt; ++v) {
    mf.add_edge(source, 1 + v, e_cnt * grid);
    mf.add_edge(1 + v, sink, e_cnt * grid + 2 * k - deg[v] * grid);
  }
  for (const auto& e : g.edges) {
    mf.add_edge(1 + e.u, 1 + e.v, grid);
    mf.add_edge(1 + e.v, 1 + e.u, grid);
  }
  i64 cut = mf.run(source, sink);
  i64 all = e_cnt * static_cast<i64>(v_cnt) * grid;
  if (cut >= all) return false;
  if (witness) {
    auto side = mf.min_cut_side(source);
    witness->clear();
    for (std::size_t v = 0; v < v_cnt; ++v) {
      if (side[1 + v]) witness->push_back(v);
    }
  }
  return true;
}

DensestResult densest_flow(const OigGraph& g) {
  std::size_t v_cnt = g.vertex_count();
  DensestResult best;
  if (g.edges.empty()) {
    if (v_cnt > 0) best.witness.push_back(0);
    return best;
  }
  i64 grid = static_cast<i64>(v_cnt) * static_cast<i64>(v_cnt);
  i64 lo = 0;  // denser subset exists
  i64 hi = grid * static_cast<i64>(max_degree(g));  // none
  while (hi - lo > 1) {
    i64 mid = lo + (hi - lo) / 2;
    (denser_than(g, mid, grid) ? lo : hi) = mid;
  }
  Rational r = scan_interval(hi, grid, v_cnt);
  best.num = r.num;
  best.den = r.den;
  if (!denser_than(g, hi - 1, grid, &best.witness) || best.witness.empty()) {
    throw Error("solver-failure: densest witness extraction failed");
  }
  return best;
}

}  // namespace

DensestResult densest_subgraph(const OigGraph& g, bool force_flow) {
  if (!force_flow && g.vertex_count() <= 20) return densest_exhaustive(g);
  return densest_flow(g);
}

DualityReport duality_check(const OigGraph& g, bool force_flow) {
  DualityReport rep;
  FractionalOrientation fo = min_max_fractional_orientation(g);
  DensestResult dr = densest_subgraph(g, force_flow);
  rep.orient_num = fo.value_num;
  rep.orient_den = fo.value_den;
  rep.dens_num = dr.num;
  rep.dens_den = dr.den;
  rep.equal = static_cast<i128>(fo.value_num) * dr.den ==
              static_cast<i128>(dr.num) * fo.value_den;
  return rep;
}

std::int64_t min_max_integral_orientation(const OigGraph& g) {
  if (g.edges.empty()) return 0;
  i64 lo = 0;  // infeasible
  i64 hi = static_cast<i64>(max_degree(g));  // feasible
  while (hi - lo > 1) {
    i64 mid = lo + (hi - lo) / 2;
    (orientation_feasible(g, mid, 1) ? hi : lo) = mid;
  }
  return hi;
}

std::vector<std::int64_t> enumerate_orientation_values(const OigGraph& g,
                                                       std::size_t max_edges) {
  std::size_t e_cnt = g.edges.size();
  if (e_cnt > max_edges) {
    throw Error("enumeration-cap-exceeded: too many edges to orient");
  }
  std::vector<std::int64_t> values;
  values.reserve(std::size_t{1} << e_cnt);
  std::vector<std::int64_t> deg(g.vertex_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e_cnt); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < e_cnt; ++i) {
      std::size_t charged = (mask >> i & 1) ? g.edges[i].u : g.edges[i].v;
      worst = std::max(worst, ++deg[charged]);
    }
    values.push_back(worst);
  }
  return values;
}

ParityOrientation parity_orientation(std::size_t dim) {
  if (dim > 16) throw Error("invalid-parameters: cube dim > 16");
  ParityOrientation po;
  po.dim = dim;
  po.out_degree.assign(std::size_t{1} << dim, 0);
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << dim); ++u) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (u >> j & 1) continue;
      std::uint64_t v = u | (std::uint64_t{1} << j);
      unsigned parity_u = std::popcount(u) & 1u;
      std::size_t rank = j + 1;
      bool head_u = (parity_u == (rank & 1u));
      po.edges.push_back({static_cast<std::size_t>(u),
                          static_cast<std::size_t>(v), j});
      po.toward_u.push_back(head_u ? 1 : 0);
      ++po.out_degree[head_u ? v : u];
    }
  }
  return po;
}

std::uint8_t parity_predict(unsigned labels_parity, std::size_t rank_1based) {
  return ((labels_parity & 1u) == (rank_1based & 1u)) ? 0 : 1;
}

}  // namespace paclab::oig
