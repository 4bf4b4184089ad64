#include "paclab/core/hypothesis.hpp"

#include <algorithm>
#include <set>

#include "paclab/core/error.hpp"

namespace paclab::core {

std::size_t HypothesisClass::size() const {
  throw Error("invalid-parameters: class '" + name() + "' is not enumerable");
}

Hypothesis HypothesisClass::member(std::size_t) const {
  throw Error("invalid-parameters: class '" + name() + "' is not enumerable");
}

bool HypothesisClass::consistent(const LabeledSeq& sample) const {
  if (!enumerable())
    throw Error("invalid-parameters: default consistency needs enumeration");
  for (std::size_t h = 0; h < size(); ++h) {
    const Hypothesis hyp = member(h);
    bool ok = true;
    for (const auto& ex : sample)
      if (hyp(ex.x) != ex.y) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<BehaviorMask> HypothesisClass::behaviors(const PointSeq& points,
                                                     std::size_t cap) const {
  if (!enumerable())
    throw Error("invalid-parameters: default projection needs enumeration");
  if (points.size() > 63)
    throw Error("projection-cap-exceeded: more than 63 points");
  std::set<BehaviorMask> seen;
  for (std::size_t h = 0; h < size(); ++h) {
    const Hypothesis hyp = member(h);
    BehaviorMask mask = 0;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (hyp(points[j])) mask |= BehaviorMask{1} << j;
    seen.insert(mask);
    if (seen.size() > cap)
      throw Error("projection-cap-exceeded: more than " + std::to_string(cap) +
                  " behaviors");
  }
  return {seen.begin(), seen.end()};
}

bool HypothesisClass::shatters(const PointSeq& points) const {
  if (points.size() > 63) return false;
  const std::size_t want = std::size_t{1} << points.size();
  return behaviors(points, want).size() == want;
}

ExplicitClass::ExplicitClass(std::string name, PointSeq domain,
                             std::vector<BehaviorMask> labels)
    : name_(std::move(name)), domain_(std::move(domain)), labels_(std::move(labels)) {
  if (domain_.empty() || domain_.size() > 63)
    throw Error("invalid-parameters: explicit domain must have 1..63 points");
  PointSeq check = domain_;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw Error("invalid-parameters: duplicate domain point");
  std::set<BehaviorMask> dedup(labels_.begin(), labels_.end());
  if (dedup.size() != labels_.size())
    throw Error("invalid-parameters: duplicate hypothesis row");
  if (labels_.empty()) throw Error("invalid-parameters: empty class");
}

std::size_t ExplicitClass::domain_index(const DomainPoint& p) const {
  for (std::size_t j = 0; j < domain_.size(); ++j)
    if (domain_[j] == p) return j;
  throw Error("invalid-parameters: point " + to_string(p) +
              " outside explicit domain");
}

std::uint8_t ExplicitClass::label(std::size_t h, const DomainPoint& p) const {
  if (h >= labels_.size()) throw Error("invalid-parameters: hypothesis index");
  return (labels_[h] >> domain_index(p)) & 1u;
}

Hypothesis ExplicitClass::member(std::size_t index) const {
  if (index >= labels_.size())
    throw Error("invalid-parameters: hypothesis index");
  // Copy what the closure needs; the class object may go away.
  auto domain = domain_;
  auto row = labels_[index];
  return Hypothesis{[domain, row](const DomainPoint& p) -> std::uint8_t {
    for (std::size_t j = 0; j < domain.size(); ++j)
      if (domain[j] == p) return (row >> j) & 1u;
    throw Error("invalid-parameters: point " + to_string(p) +
                " outside explicit domain");
  }};
}

}  // namespace paclab::core
