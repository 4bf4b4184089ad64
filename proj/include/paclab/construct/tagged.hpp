#pragma once

#include <memory>
#include <vector>

#include "paclab/core/distribution.hpp"
#include "paclab/core/hypothesis.hpp"

namespace paclab::construct {

// Product construction: the domain is replicated across tag values 1..copies,
// hypotheses ignore the tag, and every family member is ported to every tag
// slice. Grows a distribution family without changing the learning problem on
// any single slice.
struct TaggedFamily {
  std::shared_ptr<core::HypothesisClass> hypothesis_class;
  std::vector<core::DiscreteDistribution> members;
};

TaggedFamily tagged_family(std::shared_ptr<core::HypothesisClass> base,
                           const std::vector<core::DiscreteDistribution>& family,
                           std::int64_t copies);

}  // namespace paclab::construct
