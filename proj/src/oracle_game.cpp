#include "paclab/oracle/game.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "paclab/core/error.hpp"
#include "paclab/oracle/lp.hpp"

namespace paclab::oracle {

namespace {

constexpr double kTol = 1e-6;

struct CellTable {
  std::vector<GameCell> cells;
  // weight[h][z]: probability that member h realizes cell z's sequence and
  // the query lands on z's point.
  std::vector<std::vector<double>> weight;
};

void validate(const GameInstance& inst) {
  if (!inst.cls) throw Error("invalid-parameters: missing class");
  if (inst.cls->domain().size() > 4 || inst.cls->size() > 16 || inst.m > 2) {
    throw Error("invalid-parameters: game instance exceeds caps");
  }
  if (inst.cls->size() == 0) {
    throw Error("invalid-parameters: empty hypothesis class");
  }
  if (inst.dist.support() != inst.cls->domain()) {
    throw Error(
        "invalid-parameters: game distribution must cover the domain");
  }
  for (double w : inst.dist.weights()) {
    if (w <= 0) {
      throw Error(
          "invalid-parameters: game distribution must be positive");
    }
  }
}

// Realizable labeled sequences, each paired with every query point.
CellTable build_cells(const GameInstance& inst) {
  const auto& domain = inst.cls->domain();
  std::size_t x_cnt = domain.size();
  std::size_t h_cnt = inst.cls->size();

  std::vector<core::Hypothesis> members;
  members.reserve(h_cnt);
  for (std::size_t h = 0; h < h_cnt; ++h) members.push_back(inst.cls->member(h));

  std::map<core::LabeledSeq, std::vector<double>> seq_prob;  // per member
  std::vector<std::size_t> pick(inst.m, 0);
  for (;;) {
    core::PointSeq pts;
    double base = 1;
    for (std::size_t i = 0; i < inst.m; ++i) {
      pts.push_back(domain[pick[i]]);
      base *= inst.dist.weights()[pick[i]];
    }
    for (std::size_t h = 0; h < h_cnt; ++h) {
      core::LabeledSeq seq;
      for (const auto& p : pts) seq.push_back({p, members[h].fn(p)});
      auto [it, fresh] = seq_prob.try_emplace(seq);
      if (fresh) it->second.assign(h_cnt, 0.0);
      it->second[h] += base;
    }
    std::size_t i = 0;
    while (i < inst.m && ++pick[i] == x_cnt) pick[i++] = 0;
    if (i == inst.m) break;
  }

  CellTable table;
  for (const auto& [seq, prob] : seq_prob) {
    for (std::size_t xi = 0; xi < x_cnt; ++xi) {
      table.cells.push_back({seq, domain[xi]});
      for (std::size_t h = 0; h < h_cnt; ++h) {
        if (table.weight.size() <= h) table.weight.emplace_back();
        table.weight[h].push_back(prob[h] * inst.dist.weights()[xi]);
      }
    }
  }
  return table;
}

// Per-member constants of the linear loss: with every cell predicting zero
// the loss is base[h]; switching cell z to a one-prediction moves it by
// delta[h][z].
struct LossForm {
  std::vector<double> base;
  std::vector<std::vector<double>> delta;
};

LossForm loss_form(const GameInstance& inst, const CellTable& table) {
  std::size_t h_cnt = inst.cls->size();
  std::size_t z_cnt = table.cells.size();
  LossForm lf;
  lf.base.assign(h_cnt, 0.0);
  lf.delta.assign(h_cnt, std::vector<double>(z_cnt, 0.0));
  for (std::size_t h = 0; h < h_cnt; ++h) {
    core::Hypothesis mem = inst.cls->member(h);
    for (std::size_t z = 0; z < z_cnt; ++z) {
      double w = table.weight[h][z];
      if (w == 0) continue;
      std::uint8_t label = mem.fn(table.cells[z].x);
      lf.base[h] += w * label;
      lf.delta[h][z] = w * (1 - 2.0 * label);
    }
  }
  return lf;
}

std::vector<std::pair<double, std::vector<std::uint8_t>>> threshold_mixture(
    const std::vector<double>& p) {
  std::vector<double> breaks(p);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<std::pair<double, std::vector<std::uint8_t>>> mix;
  double a = 0;
  auto vertex_above = [&](double level) {
    std::vector<std::uint8_t> v(p.size());
    for (std::size_t z = 0; z < p.size(); ++z) v[z] = p[z] > level ? 1 : 0;
    return v;
  };
  for (double d : breaks) {
    if (d <= a) continue;
    mix.emplace_back(d - a, vertex_above(a));
    a = d;
  }
  if (a < 1.0) mix.emplace_back(1.0 - a, vertex_above(a));
  return mix;
}

}  // namespace

GameSolution optimal_fixed_error(const GameInstance& inst) {
  validate(inst);
  CellTable table = build_cells(inst);
  LossForm lf = loss_form(inst, table);
  std::size_t h_cnt = inst.cls->size();
  std::size_t z_cnt = table.cells.size();

  // Learner LP over [p_0..p_{Z-1}, u]: minimize u with every member's loss
  // held at or below u and each p in [0, 1].
  {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t h = 0; h < h_cnt; ++h) {
      std::vector<double> row(z_cnt + 1, 0.0);
      for (std::size_t z = 0; z < z_cnt; ++z) row[z] = lf.delta[h][z];
      row[z_cnt] = -1;
      a.push_back(std::move(row));
      b.push_back(-lf.base[h]);
    }
    for (std::size_t z = 0; z < z_cnt; ++z) {
      std::vector<double> row(z_cnt + 1, 0.0);
      row[z] = 1;
      a.push_back(std::move(row));
      b.push_back(1.0);
    }
    std::vector<double> c(z_cnt + 1, 0.0);
    c[z_cnt] = -1;
    LpResult pr = solve_lp(std::move(a), std::move(b), std::move(c));
    if (pr.status != LpStatus::optimal) {
      throw Error("solver-failure: learner game LP did not solve");
    }
    GameSolution sol;
    sol.value = -pr.value;
    sol.cells = table.cells;
    sol.predict_one.assign(pr.x.begin(), pr.x.begin() + z_cnt);
    for (double& pz : sol.predict_one) pz = std::clamp(pz, 0.0, 1.0);
    sol.learner_mixture = threshold_mixture(sol.predict_one);

    // Adversary LP over [q_0..q_{H-1}, s_0..s_{Z-1}]: maximize base.q minus
    // the learner's total recoverable slack, q on the simplex.
    std::vector<std::vector<double>> da;
    std::vector<double> db;
    for (std::size_t z = 0; z < z_cnt; ++z) {
      std::vector<double> row(h_cnt + z_cnt, 0.0);
      for (std::size_t h = 0; h < h_cnt; ++h) row[h] = -lf.delta[h][z];
      row[h_cnt + z] = -1;
      da.push_back(std::move(row));
      db.push_back(0.0);
    }
    std::vector<double> ones(h_cnt + z_cnt, 0.0);
    for (std::size_t h = 0; h < h_cnt; ++h) ones[h] = 1;
    da.push_back(ones);
    db.push_back(1.0);
    for (double& v : ones) v = -v;
    da.push_back(std::move(ones));
    db.push_back(-1.0);
    std::vector<double> dc(h_cnt + z_cnt, 0.0);
    for (std::size_t h = 0; h < h_cnt; ++h) dc[h] = lf.base[h];
    for (std::size_t z = 0; z < z_cnt; ++z) dc[h_cnt + z] = -1;
    LpResult du = solve_lp(std::move(da), std::move(db), std::move(dc));
    if (du.status != LpStatus::optimal) {
      throw Error("solver-failure: adversary game LP did not solve");
    }
    sol.dual_value = du.value;
    sol.adversary_mixture.assign(du.x.begin(), du.x.begin() + h_cnt);
    double q_sum = 0;
    for (double& q : sol.adversary_mixture) q_sum += (q = std::max(q, 0.0));
    for (double& q : sol.adversary_mixture) q /= q_sum;

    // Certify: matching LP values plus both best responses hitting them.
    double attack = 0;
    for (std::size_t h = 0; h < h_cnt; ++h) {
      double loss = lf.base[h];
      for (std::size_t z = 0; z < z_cnt; ++z) {
        loss += sol.predict_one[z] * lf.delta[h][z];
      }
      attack = std::max(attack, loss);
    }
    double defend = 0;
    for (std::size_t h = 0; h < h_cnt; ++h) {
      defend += sol.adversary_mixture[h] * lf.base[h];
    }
    for (std::size_t z = 0; z < z_cnt; ++z) {
      double slope = 0;
      for (std::size_t h = 0; h < h_cnt; ++h) {
        slope += sol.adversary_mixture[h] * lf.delta[h][z];
      }
      defend += std::min(0.0, slope);
    }
    sol.certified = std::abs(sol.value - sol.dual_value) <= kTol &&
                    std::abs(attack - sol.value) <= kTol &&
                    std::abs(defend - sol.value) <= kTol;
    return sol;
  }
}

double game_value_by_enumeration(const GameInstance& inst,
                                 std::uint64_t limit) {
  validate(inst);
  CellTable table = build_cells(inst);
  LossForm lf = loss_form(inst, table);
  std::size_t h_cnt = inst.cls->size();
  std::size_t z_cnt = table.cells.size();
  std::size_t x_cnt = inst.cls->domain().size();
  std::size_t seq_cnt = z_cnt / x_cnt;

  // A deterministic learner picks one of 2^|X| predictors per sequence.
  double raw = std::pow(std::pow(2.0, static_cast<double>(x_cnt)),
                        static_cast<double>(seq_cnt));
  if (raw > static_cast<double>(limit)) {
    throw Error("enumeration-cap-exceeded: deterministic learner space");
  }
  auto count = static_cast<std::uint64_t>(raw + 0.5);

  std::map<std::vector<double>, int> seen;
  std::vector<std::vector<double>> columns;
  std::vector<std::uint64_t> reps;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<double> loss(lf.base);
    std::uint64_t rest = code;
    for (std::size_t s = 0; s < seq_cnt; ++s) {
      auto predictor = rest % (std::uint64_t{1} << x_cnt);
      rest /= (std::uint64_t{1} << x_cnt);
      for (std::size_t xi = 0; xi < x_cnt; ++xi) {
        if (!(predictor >> xi & 1)) continue;
        std::size_t z = s * x_cnt + xi;
        for (std::size_t h = 0; h < h_cnt; ++h) loss[h] += lf.delta[h][z];
      }
    }
    for (double& v : loss) v = std::round(v * 1e12) / 1e12;
    if (seen.emplace(loss, 1).second) {
      columns.push_back(std::move(loss));
      reps.push_back(code);
    }
  }

  // Matrix game: mixture y over columns, value u, every member row at most u.
  std::size_t cols = columns.size();
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t h = 0; h < h_cnt; ++h) {
    std::vector<double> row(cols + 1, 0.0);
    for (std::size_t i = 0; i < cols; ++i) row[i] = columns[i][h];
    row[cols] = -1;
    a.push_back(std::move(row));
    b.push_back(0.0);
  }
  std::vector<double> simplex_row(cols + 1, 1.0);
  simplex_row[cols] = 0;
  a.push_back(simplex_row);
  b.push_back(1.0);
  for (double& v : simplex_row) v = -v;
  a.push_back(std::move(simplex_row));
  b.push_back(-1.0);
  std::vector<double> c(cols + 1, 0.0);
  c[cols] = -1;
  LpResult res = solve_lp(std::move(a), std::move(b), std::move(c));
  if (res.status != LpStatus::optimal) {
    throw Error("solver-failure: matrix game LP did not solve");
  }
  return -res.value;
}

}  // namespace paclab::oracle
