#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "paclab/core/point.hpp"

namespace paclab::unitest {

// View of the reference set Y the tester compares against: its size plus a
// membership predicate (row domains never materialize their points).
struct PointSetView {
  std::size_t size = 0;
  std::function<bool(const core::DomainPoint&)> contains;

  static PointSetView of_points(core::PointSeq points);
};

struct CollisionStats {
  std::uint64_t collisions = 0;  // unordered sample index pairs that agree
  std::uint64_t pairs = 0;       // m choose 2
  double statistic = 0;          // collisions / pairs
};

// Counts colliding pairs by sort + run length; needs at least 2 values.
CollisionStats collision_statistic(core::PointSeq values);

struct TesterParams {
  double xi = 0;     // total-variation threshold, in (0, 1)
  double delta = 0;  // failure probability, in (0, 1)
};

struct TesterDecision {
  bool accept = false;
  std::size_t blocks = 0;
  std::size_t block_size = 0;
  std::size_t blocks_accepting = 0;
  double threshold = 0;
};

// Block-majority collision test against the uniform distribution over a set
// of size n. Splits S into ceil(18 ln(2/delta)) consecutive blocks, accepts a
// block when its collision statistic is strictly below (1 + 2 xi^2) / n, and
// accepts overall when at least half the blocks accept. Throws
// sample-too-small when blocks would hold fewer than 2 points.
TesterDecision test_unif(std::size_t n, const TesterParams& params,
                         const core::PointSeq& sample);

// Membership-gated variant: rejects outright when any sample point lies
// outside Y, otherwise runs test_unif with xi halved.
TesterDecision m_test_unif(const PointSetView& y, const TesterParams& params,
                           const core::PointSeq& sample);

// Sample size at which the gated tester's guarantee holds for a set of size n
// with the given xi and delta: ceil(18 * 64 * sqrt(n) * ln(2/delta) / xi^2).
// Callers that go through m_test_unif must pass xi/2 here, matching the
// internal halving.
std::uint64_t m_test_sample_bound(std::size_t n, double xi, double delta);

std::size_t block_count(double delta);

}  // namespace paclab::unitest
