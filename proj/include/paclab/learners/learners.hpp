#pragma once

#include <functional>
#include <memory>

#include "paclab/core/hypothesis.hpp"
#include "paclab/core/random.hpp"
#include "paclab/core/sample.hpp"

namespace paclab::learners {

// A learner maps a labeled training sequence to a predictor; randomized
// learners draw from the supplied generator, and randomized predictors keep a
// substream of it.
using Learner =
    std::function<core::Predictor(const core::LabeledSeq&, core::Rng&)>;

// Constant predictor carrying the majority label of the sample; ties and the
// empty sample give label 1.
core::Predictor majority_train(const core::LabeledSeq& sample);
Learner make_majority_learner();

// First member in canonical order minimizing empirical loss on the sample
// (the first consistent member when the sample is realizable). Enumerable
// classes only.
core::Predictor erm_lex_train(const core::HypothesisClass& cls,
                              const core::LabeledSeq& sample);
Learner make_erm_lex_learner(std::shared_ptr<const core::HypothesisClass> cls);

// Worst-case expected loss among empirical-risk minimizers: the adversary
// picks the minimizer after seeing the sample. Closed form for the row class;
// enumeration otherwise.
double adversarial_erm_loss(const core::HypothesisClass& cls,
                            const core::LabeledSeq& sample,
                            const core::Hypothesis& truth,
                            const core::DiscreteDistribution& d);

// Validates a candidate hypothesis against a majority baseline: the sample is
// split uniformly at random into halves (first half rounded up), the majority
// rule is trained on the first half, and whichever of {candidate, majority}
// has the smaller loss on the second half is returned (candidate on ties).
core::Predictor validation_train(const core::Hypothesis& candidate,
                                 const core::LabeledSeq& sample,
                                 core::Rng& rng);
Learner make_validation_learner(core::Hypothesis candidate);

// With probability min(1, 2 c^|sample|) returns a fair-coin predictor,
// otherwise defers to the base learner.
core::Predictor mixture_train(const Learner& base, double c,
                              const core::LabeledSeq& sample, core::Rng& rng);
Learner make_mixture_learner(Learner base, double c);

// Fair coin on every query, backed by its own stream.
core::Predictor coin_predictor(core::Rng rng);

}  // namespace paclab::learners
