#include "paclab/core/sample.hpp"

namespace paclab::core {

double loss_sample(const Predictor& pred, const LabeledSeq& sample) {
  if (sample.empty()) return 0.0;
  std::size_t wrong = 0;
  for (const auto& ex : sample)
    if (pred(ex.x) != ex.y) ++wrong;
  return static_cast<double>(wrong) / static_cast<double>(sample.size());
}

double loss_distribution(const Predictor& pred, const DiscreteDistribution& d,
                         const Hypothesis& truth) {
  double loss = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const DomainPoint& x = d.support()[i];
    if (pred(x) != truth(x)) loss += d.weights()[i];
  }
  return loss;
}

LabeledSeq label_points(const PointSeq& points, const Hypothesis& truth) {
  LabeledSeq out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p, truth(p)});
  return out;
}

PointSeq strip_labels(const LabeledSeq& sample) {
  PointSeq out;
  out.reserve(sample.size());
  for (const auto& ex : sample) out.push_back(ex.x);
  return out;
}

LabeledSeq draw_labeled(const DiscreteDistribution& d, const Hypothesis& truth,
                        std::size_t m, Rng& rng) {
  LabeledSeq out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const DomainPoint& x = d.sample(rng);
    out.push_back({x, truth(x)});
  }
  return out;
}

}  // namespace paclab::core
