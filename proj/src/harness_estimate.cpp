#include "paclab/harness/estimate.hpp"

#include <cmath>
#include <utility>

#include "paclab/core/error.hpp"
#include "paclab/core/parallel.hpp"

namespace paclab::harness {

ErrorEstimate estimate_worst_mean(const std::vector<TrialValue>& scenarios,
                                  std::uint64_t trials,
                                  const core::RandomSource& rs,
                                  std::uint64_t salt, bool parallel) {
  if (scenarios.empty() || trials == 0) {
    throw Error("invalid-parameters: estimation needs scenarios and trials");
  }
  if (trials >= (std::uint64_t{1} << 32) ||
      scenarios.size() >= (std::size_t{1} << 32)) {
    throw Error("invalid-parameters: trial or scenario count too large");
  }
  ErrorEstimate est;
  est.trials = trials;
  std::vector<double> slot(trials);
  for (std::size_t j = 0; j < scenarios.size(); ++j) {
    core::for_each_trial(trials, parallel, [&](std::uint64_t i) {
      core::Rng rng = rs.stream(salt, (i << 32) | j);
      slot[i] = scenarios[j](rng);
    });
    double sum = 0;
    for (double v : slot) sum += v;
    double mean = sum / static_cast<double>(trials);
    if (j == 0 || mean > est.estimate) {
      est.estimate = mean;
      est.worst_index = j;
    }
  }
  est.std_error = std::sqrt(
      std::max(0.0, est.estimate * (1.0 - est.estimate)) /
      static_cast<double>(trials));
  est.ci_half_width =
      std::max(1.96 * est.std_error, 1.0 / static_cast<double>(trials));
  return est;
}

TrialValue learner_trial(learners::Learner learner, core::Hypothesis truth,
                         core::DiscreteDistribution dist, std::size_t m) {
  return [learner = std::move(learner), truth = std::move(truth),
          dist = std::move(dist), m](core::Rng& rng) -> double {
    core::LabeledSeq sample = core::draw_labeled(dist, truth, m, rng);
    core::Predictor pred = learner(sample, rng);
    const core::DomainPoint& x = dist.sample(rng);
    return pred.fn(x) != truth.fn(x) ? 1.0 : 0.0;
  };
}

ErrorEstimate estimate_error_rate(const learners::Learner& learner,
                                  const std::vector<core::Hypothesis>& truths,
                                  const core::DiscreteDistribution& dist,
                                  std::size_t m, std::uint64_t trials,
                                  const core::RandomSource& rs,
                                  std::uint64_t salt, bool parallel) {
  std::vector<TrialValue> scenarios;
  scenarios.reserve(truths.size());
  for (const auto& truth : truths) {
    scenarios.push_back(learner_trial(learner, truth, dist, m));
  }
  return estimate_worst_mean(scenarios, trials, rs, salt, parallel);
}

}  // namespace paclab::harness
