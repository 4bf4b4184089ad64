#include "paclab/construct/tagged.hpp"

#include "paclab/core/error.hpp"

namespace paclab::construct {

namespace {

class TagBlindClass : public core::HypothesisClass {
 public:
  explicit TagBlindClass(std::shared_ptr<core::HypothesisClass> base)
      : base_(std::move(base)) {}

  std::string name() const override { return base_->name() + "-tagged"; }
  bool enumerable() const override { return base_->enumerable(); }
  std::size_t size() const override { return base_->size(); }

  core::Hypothesis member(std::size_t index) const override {
    auto h = base_->member(index);
    return core::Hypothesis{[h](const core::DomainPoint& p) {
      core::DomainPoint stripped = p;
      stripped.tag = 0;
      return h(stripped);
    }};
  }

  bool consistent(const core::LabeledSeq& sample) const override {
    return base_->consistent(strip(sample));
  }

  std::vector<core::BehaviorMask> behaviors(const core::PointSeq& points,
                                            std::size_t cap) const override {
    // Distinct tagged points may collapse to the same base point; project on
    // the collapsed base points and expand masks back.
    core::PointSeq base_points;
    std::vector<std::size_t> where;  // position of each input in base_points
    for (const auto& p : points) {
      core::DomainPoint stripped = p;
      stripped.tag = 0;
      std::size_t at = base_points.size();
      for (std::size_t j = 0; j < base_points.size(); ++j)
        if (base_points[j] == stripped) {
          at = j;
          break;
        }
      if (at == base_points.size()) base_points.push_back(stripped);
      where.push_back(at);
    }
    auto base_masks = base_->behaviors(base_points, cap);
    std::vector<core::BehaviorMask> out;
    out.reserve(base_masks.size());
    for (auto bm : base_masks) {
      core::BehaviorMask mask = 0;
      for (std::size_t j = 0; j < points.size(); ++j)
        if ((bm >> where[j]) & 1u) mask |= core::BehaviorMask{1} << j;
      out.push_back(mask);
    }
    return out;
  }

 private:
  static core::LabeledSeq strip(const core::LabeledSeq& sample) {
    core::LabeledSeq out = sample;
    for (auto& ex : out) ex.x.tag = 0;
    return out;
  }

  std::shared_ptr<core::HypothesisClass> base_;
};

}  // namespace

TaggedFamily tagged_family(std::shared_ptr<core::HypothesisClass> base,
                           const std::vector<core::DiscreteDistribution>& family,
                           std::int64_t copies) {
  if (!base || copies < 1)
    throw Error("invalid-parameters: tagged family needs a class and copies >= 1");
  TaggedFamily out;
  out.hypothesis_class = std::make_shared<TagBlindClass>(base);
  for (std::int64_t tag = 1; tag <= copies; ++tag) {
    for (const auto& d : family) {
      core::PointSeq pts = d.support();
      for (auto& p : pts) p.tag = tag;
      out.members.emplace_back(std::move(pts), d.weights());
    }
  }
  return out;
}

}  // namespace paclab::construct
