#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "paclab/core/distribution.hpp"
#include "paclab/core/random.hpp"
#include "paclab/core/sample.hpp"
#include "paclab/learners/learners.hpp"

namespace paclab::harness {

struct ErrorEstimate {
  double estimate = 0;        // worst scenario mean
  double std_error = 0;       // of the worst scenario
  double ci_half_width = 0;   // max(1.96 se, 1/trials)
  std::uint64_t trials = 0;   // per scenario
  std::size_t worst_index = 0;
};

// One Monte-Carlo draw of a [0,1]-valued quantity.
using TrialValue = std::function<double(core::Rng&)>;

// Runs `trials` draws of every scenario (trial i of scenario j draws from
// stream (salt, i << 32 | j), independent of worker count) and reports the
// worst scenario mean. The standard error uses the mean(1-mean) bound, which
// dominates the variance of any [0,1] variable.
ErrorEstimate estimate_worst_mean(const std::vector<TrialValue>& scenarios,
                                  std::uint64_t trials,
                                  const core::RandomSource& rs,
                                  std::uint64_t salt, bool parallel);

// Trial closure for a train-then-test error draw: sample m labeled points
// from dist, train, test on one fresh point.
TrialValue learner_trial(learners::Learner learner, core::Hypothesis truth,
                         core::DiscreteDistribution dist, std::size_t m);

// Convenience wrapper: worst over truths under a shared distribution.
ErrorEstimate estimate_error_rate(const learners::Learner& learner,
                                  const std::vector<core::Hypothesis>& truths,
                                  const core::DiscreteDistribution& dist,
                                  std::size_t m, std::uint64_t trials,
                                  const core::RandomSource& rs,
                                  std::uint64_t salt, bool parallel);

}  // namespace paclab::harness
