#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "paclab/core/distribution.hpp"
#include "paclab/core/hypothesis.hpp"

namespace paclab::construct {

// Hypotheses over one grid row: exactly M of the n row points carry the
// minority label b, every other row point carries 1-b, and everything off the
// row is labeled 0. The class is the union over b in {0,1} of those two
// families; it is far too large to enumerate at interesting sizes, so
// consistency, projection, shattering and the worst-consistent-hypothesis
// oracle are closed forms.
struct RowHypothesis {
  std::uint8_t minority_label = 1;
  std::vector<std::int64_t> minority_cols;  // sorted, size M
};

class RowClass : public core::HypothesisClass {
 public:
  // Requires 1 <= M and 2M < n so the minority label is well defined.
  RowClass(std::int64_t n, std::int64_t big_m);

  std::string name() const override;
  bool enumerable() const override { return false; }

  bool consistent(const core::LabeledSeq& sample) const override;
  std::vector<core::BehaviorMask> behaviors(const core::PointSeq& points,
                                            std::size_t cap) const override;
  bool shatters(const core::PointSeq& points) const override;

  std::int64_t n() const { return n_; }
  std::int64_t big_m() const { return big_m_; }

  core::DomainPoint point(std::int64_t col) const { return {n_, col, 0}; }
  bool on_row(const core::DomainPoint& p) const;

  // Uniform distribution over the row.
  core::DiscreteDistribution distribution() const;

  core::Hypothesis as_hypothesis(const RowHypothesis& h) const;

  // Minority label b on columns 0..M-1.
  RowHypothesis canonical_hypothesis(std::uint8_t minority_label) const;

  // Largest expected loss under the row distribution among hypotheses
  // consistent with the sample, against the given truth. The sample must be
  // realizable (inconsistent-sample otherwise). Exact closed form.
  double worst_consistent_loss(const core::LabeledSeq& sample,
                               const RowHypothesis& truth) const;

  // A witness achieving worst_consistent_loss, deterministic tie-breaks.
  RowHypothesis canonical_worst(const core::LabeledSeq& sample,
                                const RowHypothesis& truth) const;

 private:
  struct SampleSplit;
  SampleSplit split_sample(const core::LabeledSeq& sample) const;

  std::int64_t n_;
  std::int64_t big_m_;
};

// All 2 * C(n, M) members as an explicit class, for small-row cross-checks.
// Throws enumeration-cap-exceeded when the member count exceeds the cap.
core::ExplicitClass enumerate_row_class(const RowClass& cls,
                                        std::size_t cap = 100000);

}  // namespace paclab::construct
