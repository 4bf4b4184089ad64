#pragma once

#include <cstdint>
#include <vector>

#include "paclab/core/hypothesis.hpp"
#include "paclab/core/point.hpp"
#include "paclab/core/sample.hpp"

namespace paclab::oig {

// Projection of a class onto a point multiset: the distinct points (sorted,
// with multiplicities) and the distinct behavior masks over them, sorted.
struct BehaviorSet {
  core::CollapsedPoints points;
  std::vector<core::BehaviorMask> behaviors;
};

BehaviorSet project_behaviors(const core::HypothesisClass& cls,
                              const core::PointSeq& raw,
                              std::size_t cap = 4096);

// Bits pinned by a labeled sample over the collapsed points: behavior b is
// consistent with the sample iff (b & care) == value. Conflicting labels on
// one point throw inconsistent-sample; sample points must all appear among
// the collapsed points (invalid-parameters otherwise).
struct MaskConstraint {
  core::BehaviorMask care = 0;
  core::BehaviorMask value = 0;
};

MaskConstraint mask_constraint(const core::CollapsedPoints& collapsed,
                               const core::LabeledSeq& sample);

// Behavior of a single predictor over the collapsed points.
core::BehaviorMask behavior_of(const core::Hypothesis& h,
                               const core::CollapsedPoints& collapsed);

// True iff the projection realizes all 2^q labelings of the q distinct points.
bool shatter_check(const BehaviorSet& bs);

}  // namespace paclab::oig
