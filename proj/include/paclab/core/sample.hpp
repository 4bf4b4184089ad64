#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "paclab/core/distribution.hpp"
#include "paclab/core/point.hpp"

namespace paclab::core {

struct LabeledExample {
  DomainPoint x;
  std::uint8_t y = 0;

  friend bool operator==(const LabeledExample&, const LabeledExample&) = default;
  friend auto operator<=>(const LabeledExample&, const LabeledExample&) = default;
};

using LabeledSeq = std::vector<LabeledExample>;

// A binary predictor. Randomized predictors carry their own generator inside
// the closure, so repeated queries may differ; deterministic ones must not.
struct Predictor {
  std::function<std::uint8_t(const DomainPoint&)> fn;

  std::uint8_t operator()(const DomainPoint& p) const { return fn(p); }
};

// Hypotheses are predictors that are deterministic by contract.
using Hypothesis = Predictor;

// Mean 0/1 disagreement on a labeled sequence; empty sequence gives 0.
double loss_sample(const Predictor& pred, const LabeledSeq& sample);

// Exact expected 0/1 loss under d against a deterministic truth:
// sum over the support of d of d(x) * [pred(x) != truth(x)]. Each support
// point is queried once, so for randomized predictors this is one sampled
// evaluation of the (random) loss.
double loss_distribution(const Predictor& pred, const DiscreteDistribution& d,
                         const Hypothesis& truth);

LabeledSeq label_points(const PointSeq& points, const Hypothesis& truth);
PointSeq strip_labels(const LabeledSeq& sample);

// Draw m points from d and label them with the truth.
LabeledSeq draw_labeled(const DiscreteDistribution& d, const Hypothesis& truth,
                        std::size_t m, Rng& rng);

}  // namespace paclab::core
