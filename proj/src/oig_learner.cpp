#include "paclab/oig/oig_learner.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "paclab/core/error.hpp"

namespace paclab::oig {

namespace {

std::size_t coord_of(const core::CollapsedPoints& collapsed,
                     const core::DomainPoint& p) {
  auto it = std::lower_bound(collapsed.points.begin(), collapsed.points.end(), p);
  if (it == collapsed.points.end() || *it != p) {
    throw Error("invalid-parameters: point missing from the projection");
  }
  return static_cast<std::size_t>(it - collapsed.points.begin());
}

std::size_t behavior_index(const BehaviorSet& bs, core::BehaviorMask mask,
                           const char* who) {
  auto it = std::lower_bound(bs.behaviors.begin(), bs.behaviors.end(), mask);
  if (it == bs.behaviors.end() || *it != mask) {
    throw Error(std::string("invalid-parameters: ") + who +
                      " is not realized by the class");
  }
  return static_cast<std::size_t>(it - bs.behaviors.begin());
}

// Edge list is sorted by (u, v).
const OigEdge* find_edge(const OigGraph& g, std::size_t a, std::size_t b,
                         std::size_t* index = nullptr) {
  auto it = std::lower_bound(
      g.edges.begin(), g.edges.end(), std::make_pair(a, b),
      [](const OigEdge& e, const std::pair<std::size_t, std::size_t>& key) {
        return e.u != key.first ? e.u < key.first : e.v < key.second;
      });
  if (it == g.edges.end() || it->u != a || it->v != b) return nullptr;
  if (index) *index = static_cast<std::size_t>(it - g.edges.begin());
  return &*it;
}

std::size_t live_coords(const core::CollapsedPoints& collapsed) {
  std::size_t r = 0;
  for (int mult : collapsed.multiplicity) r += (mult == 1);
  return r;
}

}  // namespace

double transductive_error_oig(const core::HypothesisClass& cls,
                              const core::PointSeq& points,
                              const core::Hypothesis& truth, std::size_t cap) {
  if (points.empty()) return 0.0;
  auto collapsed = core::collapse_points(points);
  auto total = static_cast<double>(collapsed.total);
  if (cls.shatters(collapsed.points)) {
    return static_cast<double>(live_coords(collapsed)) / (2.0 * total);
  }
  BehaviorSet bs = project_behaviors(cls, points, cap);
  core::BehaviorMask mask = behavior_of(truth, bs.points);
  std::size_t idx = behavior_index(bs, mask, "truth");
  OigGraph g = build_oig_graph(std::move(bs));
  FractionalOrientation fo = min_max_fractional_orientation(g);
  return fo.out_degree[idx] / total;
}

double query_error_mass(const OigGraph& g, const FractionalOrientation& fo,
                        core::BehaviorMask truth_mask, std::size_t coord) {
  if (g.base.points.multiplicity[coord] != 1) return 0.0;
  std::size_t a = behavior_index(g.base, truth_mask, "truth");
  core::BehaviorMask bit = core::BehaviorMask{1} << coord;
  core::BehaviorMask other = truth_mask ^ bit;
  auto it =
      std::lower_bound(g.base.behaviors.begin(), g.base.behaviors.end(), other);
  if (it == g.base.behaviors.end() || *it != other) return 0.0;
  auto b = static_cast<std::size_t>(it - g.base.behaviors.begin());
  std::size_t idx = 0;
  const OigEdge* e = (truth_mask & bit) ? find_edge(g, b, a, &idx)
                                        : find_edge(g, a, b, &idx);
  if (!e) throw Error("solver-failure: expected edge is missing");
  // mass_from_u is the error probability when the low side is the truth.
  return (truth_mask & bit) ? 1.0 - fo.mass_from_u[idx] : fo.mass_from_u[idx];
}

namespace {

struct TrainingView {
  core::LabeledSeq sample;
  std::unordered_map<core::DomainPoint, std::uint8_t, core::DomainPointHash>
      label_of;
  unsigned labels_parity = 0;  // over distinct training points
};

TrainingView make_view(core::LabeledSeq sample) {
  TrainingView tv;
  tv.sample = std::move(sample);
  for (const auto& ex : tv.sample) {
    auto [it, fresh] = tv.label_of.emplace(ex.x, ex.y);
    if (!fresh && it->second != ex.y) {
      throw Error("inconsistent-sample: one point carries both labels");
    }
    if (fresh) tv.labels_parity ^= ex.y;
  }
  return tv;
}

std::uint8_t oig_predict(const core::HypothesisClass& cls,
                         const TrainingView& tv, const core::DomainPoint& x,
                         core::Rng& rng, std::size_t cap) {
  if (auto it = tv.label_of.find(x); it != tv.label_of.end()) {
    return it->second;
  }
  core::PointSeq raw;
  raw.reserve(tv.sample.size() + 1);
  for (const auto& ex : tv.sample) raw.push_back(ex.x);
  raw.push_back(x);
  auto collapsed = core::collapse_points(raw);
  std::size_t j = coord_of(collapsed, x);
  if (cls.shatters(collapsed.points)) {
    return parity_predict(tv.labels_parity, j + 1);
  }
  BehaviorSet bs = project_behaviors(cls, raw, cap);
  MaskConstraint mc = mask_constraint(bs.points, tv.sample);
  core::BehaviorMask bit = core::BehaviorMask{1} << j;
  core::BehaviorMask low = 0;
  bool seen = false, split = false;
  std::uint8_t label = 0;
  for (core::BehaviorMask b : bs.behaviors) {
    if ((b & mc.care) != mc.value) continue;
    std::uint8_t lb = (b & bit) ? 1 : 0;
    if (!seen) {
      seen = true;
      label = lb;
      low = b & ~bit;
    } else if (lb != label) {
      split = true;
    }
  }
  if (!seen) {
    throw Error("inconsistent-sample: no member matches the labels");
  }
  if (!split) return label;
  // Both labels are live: the two consistent behaviors form the edge at j.
  OigGraph g = build_oig_graph(std::move(bs));
  FractionalOrientation fo = min_max_fractional_orientation(g);
  std::size_t a = behavior_index(g.base, low, "low behavior");
  std::size_t b = behavior_index(g.base, low | bit, "high behavior");
  std::size_t idx = 0;
  if (!find_edge(g, a, b, &idx)) {
    throw Error("solver-failure: expected edge is missing");
  }
  return rng.bernoulli(fo.mass_from_u[idx]) ? 1 : 0;
}

}  // namespace

core::Predictor oig_train(std::shared_ptr<const core::HypothesisClass> cls,
                          core::LabeledSeq sample, core::Rng rng,
                          std::size_t cap) {
  auto view = std::make_shared<TrainingView>(make_view(std::move(sample)));
  auto state = std::make_shared<core::Rng>(rng);
  return core::Predictor{[cls = std::move(cls), view, state,
                          cap](const core::DomainPoint& p) {
    return oig_predict(*cls, *view, p, *state, cap);
  }};
}

learners::Learner make_oig_learner(
    std::shared_ptr<const core::HypothesisClass> cls, std::size_t cap) {
  return [cls = std::move(cls), cap](const core::LabeledSeq& sample,
                                     core::Rng& rng) {
    return oig_train(cls, sample, rng.substream(0x6f6967), cap);
  };
}

}  // namespace paclab::oig
