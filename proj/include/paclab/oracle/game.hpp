#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "paclab/core/distribution.hpp"
#include "paclab/core/hypothesis.hpp"
#include "paclab/core/sample.hpp"

namespace paclab::oracle {

// Exact minimax expected error at a fixed training size: the learner sees m
// labeled draws from dist and predicts on one fresh draw, the adversary picks
// the labeling member. Kept tiny on purpose: at most 4 domain points, 16
// members, m <= 2, and dist positive everywhere on the domain.
struct GameInstance {
  std::shared_ptr<const core::ExplicitClass> cls;
  core::DiscreteDistribution dist;
  std::size_t m = 0;
};

// A decision cell: one realizable labeled training sequence plus one query
// point. Behavioral learner strategies set an independent probability of
// predicting 1 per cell; deterministic learners pick a label per cell.
struct GameCell {
  core::LabeledSeq seq;
  core::DomainPoint x;
};

struct GameSolution {
  double value = 0;       // learner-side LP optimum
  double dual_value = 0;  // adversary-side LP optimum
  std::vector<GameCell> cells;
  std::vector<double> predict_one;  // optimal behavioral strategy, per cell
  // The behavioral optimum as a mixture of deterministic per-cell labelings
  // (threshold decomposition, at most one vertex per distinct probability).
  std::vector<std::pair<double, std::vector<std::uint8_t>>> learner_mixture;
  std::vector<double> adversary_mixture;  // over class members
  bool certified = false;  // LP gap and both best responses within 1e-6
};

GameSolution optimal_fixed_error(const GameInstance& inst);

// Independent route for cross-checks: enumerate every deterministic learner
// (a full predictor per realizable sequence), deduplicate payoff columns, and
// solve the finite matrix game. Throws enumeration-cap-exceeded when the raw
// learner count (2^|X|)^sequences exceeds the limit.
double game_value_by_enumeration(const GameInstance& inst,
                                 std::uint64_t limit = 1u << 20);

}  // namespace paclab::oracle
