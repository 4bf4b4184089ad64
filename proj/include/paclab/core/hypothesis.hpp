#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "paclab/core/point.hpp"
#include "paclab/core/sample.hpp"

namespace paclab::core {

// Restriction of a hypothesis to an ordered point list, encoded as a bitmask:
// bit j is the label of points[j]. Point lists longer than 63 cannot be
// projected and hit the projection cap first anyway.
using BehaviorMask = std::uint64_t;

// A hypothesis class. Structured classes (too large to enumerate) override
// the consistency / projection / shattering oracles with closed forms;
// enumerable classes get default implementations that walk the members.
class HypothesisClass {
 public:
  virtual ~HypothesisClass() = default;

  virtual std::string name() const = 0;

  virtual bool enumerable() const = 0;

  // Members in canonical order; only valid when enumerable().
  virtual std::size_t size() const;
  virtual Hypothesis member(std::size_t index) const;

  // Does some member agree with every labeled example?
  virtual bool consistent(const LabeledSeq& sample) const;

  // Distinct restrictions of members to `points` (<= 63 points), sorted
  // ascending as masks. Throws projection-cap-exceeded if more than `cap`
  // distinct behaviors arise.
  virtual std::vector<BehaviorMask> behaviors(const PointSeq& points,
                                              std::size_t cap) const;

  // True iff every labeling of `points` is realized by some member.
  virtual bool shatters(const PointSeq& points) const;
};

// Explicit finite class over an explicit finite domain: a labels matrix.
class ExplicitClass : public HypothesisClass {
 public:
  // labels[h] is the bitmask of hypothesis h over domain (bit j = label of
  // domain[j]); duplicates among rows are invalid-parameters.
  ExplicitClass(std::string name, PointSeq domain,
                std::vector<BehaviorMask> labels);

  std::string name() const override { return name_; }
  bool enumerable() const override { return true; }
  std::size_t size() const override { return labels_.size(); }
  Hypothesis member(std::size_t index) const override;

  const PointSeq& domain() const { return domain_; }
  const std::vector<BehaviorMask>& labels() const { return labels_; }

  // Label of member h at p; points outside the domain are invalid-parameters.
  std::uint8_t label(std::size_t h, const DomainPoint& p) const;

 private:
  std::size_t domain_index(const DomainPoint& p) const;

  std::string name_;
  PointSeq domain_;  // sorted
  std::vector<BehaviorMask> labels_;
};

}  // namespace paclab::core
