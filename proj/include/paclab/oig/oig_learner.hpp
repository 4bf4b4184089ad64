#pragma once

#include <memory>

#include "paclab/learners/learners.hpp"
#include "paclab/oig/orientation.hpp"

namespace paclab::oig {

// Exact expected leave-one-out error of the orientation-optimal predictor on
// a point multiset labeled by `truth`: the truth behavior's fractional
// out-degree over the sequence length. Shattered projections shortcut to
// (single-copy coordinates) / (2 * length) without building the exponential
// graph: the full cube's optimum splits every edge evenly, which charges each
// labeling exactly one half per single-copy coordinate.
double transductive_error_oig(const core::HypothesisClass& cls,
                              const core::PointSeq& points,
                              const core::Hypothesis& truth,
                              std::size_t cap = 4096);

// Per-query success probability form: probability that the prediction at the
// single-copy coordinate `coord` errs when `truth_mask` is the realized
// behavior, read off an already-solved orientation. Helper for tests walking
// the query path edge by edge.
double query_error_mass(const OigGraph& g, const FractionalOrientation& fo,
                        core::BehaviorMask truth_mask, std::size_t coord);

// Transductive predictor: every query rebuilds the projection on the training
// points plus the query point. Queries colliding with a training point return
// its label; shattered projections answer by the parity rule (no graph
// build); otherwise the minimax orientation decides, with a fresh coin per
// query at fractional edges.
core::Predictor oig_train(std::shared_ptr<const core::HypothesisClass> cls,
                          core::LabeledSeq sample, core::Rng rng,
                          std::size_t cap = 4096);

learners::Learner make_oig_learner(
    std::shared_ptr<const core::HypothesisClass> cls, std::size_t cap = 4096);

}  // namespace paclab::oig
