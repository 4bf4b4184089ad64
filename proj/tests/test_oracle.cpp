#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "paclab/core/error.hpp"
#include "paclab/oig/graph.hpp"
#include "paclab/oig/orientation.hpp"
#include "paclab/oracle/game.hpp"
#include "paclab/oracle/lp.hpp"
#include "paclab/oracle/transductive.hpp"

using namespace paclab;
using core::DomainPoint;

namespace {

core::PointSeq fresh(std::size_t q) {
  core::PointSeq pts;
  for (std::size_t j = 0; j < q; ++j) {
    pts.push_back({0, static_cast<std::int64_t>(j), 0});
  }
  return pts;
}

oracle::GameInstance uniform_game(std::size_t x,
                                  std::vector<core::BehaviorMask> labels,
                                  std::size_t m) {
  oracle::GameInstance inst;
  core::PointSeq domain = fresh(x);
  inst.cls =
      std::make_shared<core::ExplicitClass>("g", domain, std::move(labels));
  inst.dist = core::DiscreteDistribution::uniform_on(domain);
  inst.m = m;
  return inst;
}

oig::OigGraph graph_of(std::size_t q, std::vector<core::BehaviorMask> masks) {
  oig::BehaviorSet bs;
  bs.points = core::collapse_points(fresh(q));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  bs.behaviors = std::move(masks);
  return oig::build_oig_graph(std::move(bs));
}

}  // namespace

TEST_CASE("simplex solves pinned instances") {
  // max x0 + x1 with x0 <= 1, x1 <= 2.
  oracle::LpResult r =
      oracle::solve_lp({{1, 0}, {0, 1}}, {1, 2}, {1, 1});
  REQUIRE(r.status == oracle::LpStatus::optimal);
  CHECK(r.value == doctest::Approx(3.0));
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(r.x[1] == doctest::Approx(2.0));

  // max x0 + 2 x1 with x0 + x1 <= 4, x1 <= 1.
  r = oracle::solve_lp({{1, 1}, {0, 1}}, {4, 1}, {1, 2});
  REQUIRE(r.status == oracle::LpStatus::optimal);
  CHECK(r.value == doctest::Approx(5.0));

  // x0 <= -1 with x0 >= 0 has no feasible point.
  r = oracle::solve_lp({{1}}, {-1}, {1});
  CHECK(r.status == oracle::LpStatus::infeasible);

  // Nothing bounds x0 from above.
  r = oracle::solve_lp({{-1}}, {0}, {1});
  CHECK(r.status == oracle::LpStatus::unbounded);

  // No constraints at all: optimum 0 for a nonpositive objective.
  r = oracle::solve_lp({}, {}, {-1, -2});
  REQUIRE(r.status == oracle::LpStatus::optimal);
  CHECK(r.value == doctest::Approx(0.0));

  // Equality pair: x0 + x1 <= 1 and -(x0 + x1) <= -1 forces the simplex onto
  // the diagonal; maximize x0.
  r = oracle::solve_lp({{1, 1}, {-1, -1}}, {1, -1}, {1, 0});
  REQUIRE(r.status == oracle::LpStatus::optimal);
  CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("lp orientation value matches the flow solver") {
  // Pinned graphs first, then seeded random behavior sets.
  CHECK(oracle::transductive_value_lp(graph_of(2, {0, 1, 3})) ==
        doctest::Approx(2.0 / 3).epsilon(1e-7));
  CHECK(oracle::transductive_value_lp(oig::hypercube_graph(3)) ==
        doctest::Approx(1.5).epsilon(1e-7));
  CHECK(oracle::transductive_value_lp(graph_of(2, {0, 3})) ==
        doctest::Approx(0.0));

  core::Rng rng(41, 0);
  for (int t = 0; t < 20; ++t) {
    std::size_t q = 2 + t % 4;
    std::vector<core::BehaviorMask> masks;
    for (std::size_t i = 0; i < 3 + rng.below(6); ++i) {
      masks.push_back(rng.below(std::uint64_t{1} << q));
    }
    oig::OigGraph g = graph_of(q, masks);
    double via_lp = oracle::transductive_value_lp(g);
    oig::FractionalOrientation fo = oig::min_max_fractional_orientation(g);
    CHECK(via_lp == doctest::Approx(fo.value).epsilon(1e-7));
  }
}

TEST_CASE("game oracle frozen values") {
  // One point, both labelings, no training data: pure guessing.
  oracle::GameSolution sol = oracle::optimal_fixed_error(uniform_game(1, {0, 1}, 0));
  CHECK(sol.value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(sol.certified);

  // Two points, all four labelings, one training draw: half the queries are
  // resolved by the sample, half stay coin flips.
  sol = oracle::optimal_fixed_error(uniform_game(2, {0, 1, 2, 3}, 1));
  CHECK(sol.value == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(sol.certified);
  CHECK(sol.dual_value == doctest::Approx(sol.value).epsilon(1e-6));

  // Singleton class: no uncertainty at any m.
  for (std::size_t m = 0; m <= 2; ++m) {
    sol = oracle::optimal_fixed_error(uniform_game(2, {2}, m));
    CHECK(sol.value == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("game oracle agrees with deterministic-learner enumeration") {
  core::Rng rng(42, 0);
  for (int t = 0; t < 8; ++t) {
    std::size_t x = 1 + t % 2;  // keep the enumeration tame
    std::uint64_t all = std::uint64_t{1} << x;
    std::vector<core::BehaviorMask> pool;
    for (std::uint64_t v = 0; v < all; ++v) pool.push_back(v);
    // Random nonempty subset of the labelings.
    std::vector<core::BehaviorMask> labels;
    for (auto v : pool) {
      if (rng.below(2)) labels.push_back(v);
    }
    if (labels.empty()) labels.push_back(0);
    std::size_t m = t % 2;

    oracle::GameInstance inst = uniform_game(x, labels, m);
    oracle::GameSolution sol = oracle::optimal_fixed_error(inst);
    double by_enum = oracle::game_value_by_enumeration(inst);
    CHECK(sol.value == doctest::Approx(by_enum).epsilon(1e-6));
    CHECK(sol.certified);
  }
}

TEST_CASE("game value is monotone in the training budget") {
  std::vector<std::vector<core::BehaviorMask>> classes = {
      {0, 1, 2, 3}, {0, 3}, {1, 2, 3}, {0, 1, 3}};
  for (const auto& labels : classes) {
    double prev = 1.0;
    for (std::size_t m = 0; m <= 2; ++m) {
      double v = oracle::optimal_fixed_error(uniform_game(2, labels, m)).value;
      CHECK(v <= prev + 1e-9);
      prev = v;
    }
  }
}

TEST_CASE("game mixtures are consistent certificates") {
  oracle::GameInstance inst = uniform_game(2, {0, 1, 3}, 1);
  oracle::GameSolution sol = oracle::optimal_fixed_error(inst);
  CHECK(sol.certified);

  double lsum = 0;
  for (const auto& [w, labels] : sol.learner_mixture) {
    CHECK(w >= -1e-12);
    CHECK(labels.size() == sol.cells.size());
    lsum += w;
  }
  CHECK(lsum == doctest::Approx(1.0).epsilon(1e-9));

  // Threshold decomposition reproduces the behavioral strategy per cell.
  for (std::size_t z = 0; z < sol.cells.size(); ++z) {
    double p = 0;
    for (const auto& [w, labels] : sol.learner_mixture) {
      p += w * labels[z];
    }
    CHECK(p == doctest::Approx(sol.predict_one[z]).epsilon(1e-9));
  }

  double asum = 0;
  for (double w : sol.adversary_mixture) {
    CHECK(w >= -1e-12);
    asum += w;
  }
  CHECK(asum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("game oracle rejects oversized instances") {
  CHECK_THROWS_AS(oracle::optimal_fixed_error(uniform_game(2, {0, 1}, 3)),
                  Error);
  std::vector<core::BehaviorMask> many;
  for (core::BehaviorMask v = 0; v < 17; ++v) many.push_back(v);
  CHECK_THROWS_AS(oracle::optimal_fixed_error(uniform_game(4, many, 1)),
                  Error);
  CHECK_THROWS_AS(
      oracle::game_value_by_enumeration(uniform_game(2, {0, 1, 2, 3}, 2), 16),
      Error);

  // The game needs the distribution to cover the whole domain.
  oracle::GameInstance inst = uniform_game(2, {0, 1}, 1);
  inst.dist = core::DiscreteDistribution::point_mass(fresh(2)[0]);
  CHECK_THROWS_AS(oracle::optimal_fixed_error(inst), Error);
}
