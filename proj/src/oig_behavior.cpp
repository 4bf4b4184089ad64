#include "paclab/oig/behavior.hpp"

#include <algorithm>

#include "paclab/core/error.hpp"

namespace paclab::oig {

BehaviorSet project_behaviors(const core::HypothesisClass& cls,
                              const core::PointSeq& raw, std::size_t cap) {
  BehaviorSet bs;
  bs.points = core::collapse_points(raw);
  if (bs.points.points.size() > 63) {
    throw Error("projection-cap-exceeded: more than 63 distinct points");
  }
  bs.behaviors = cls.behaviors(bs.points.points, cap);
  std::sort(bs.behaviors.begin(), bs.behaviors.end());
  bs.behaviors.erase(std::unique(bs.behaviors.begin(), bs.behaviors.end()),
                     bs.behaviors.end());
  return bs;
}

MaskConstraint mask_constraint(const core::CollapsedPoints& collapsed,
                               const core::LabeledSeq& sample) {
  MaskConstraint mc;
  for (const auto& ex : sample) {
    auto it = std::lower_bound(collapsed.points.begin(),
                               collapsed.points.end(), ex.x);
    if (it == collapsed.points.end() || *it != ex.x) {
      throw Error(
          "invalid-parameters: sample point missing from the projection");
    }
    auto j = static_cast<std::size_t>(it - collapsed.points.begin());
    core::BehaviorMask bit = core::BehaviorMask{1} << j;
    core::BehaviorMask want = ex.y ? bit : 0;
    if ((mc.care & bit) && (mc.value & bit) != want) {
      throw Error("inconsistent-sample: one point carries both labels");
    }
    mc.care |= bit;
    mc.value |= want;
  }
  return mc;
}

core::BehaviorMask behavior_of(const core::Hypothesis& h,
                               const core::CollapsedPoints& collapsed) {
  core::BehaviorMask mask = 0;
  for (std::size_t j = 0; j < collapsed.points.size(); ++j) {
    if (h.fn(collapsed.points[j])) mask |= core::BehaviorMask{1} << j;
  }
  return mask;
}

bool shatter_check(const BehaviorSet& bs) {
  std::size_t q = bs.points.points.size();
  if (q >= 63) return false;
  return bs.behaviors.size() == (std::size_t{1} << q);
}

}  // namespace paclab::oig
