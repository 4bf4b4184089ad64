#include "paclab/core/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "paclab/core/error.hpp"

namespace paclab::core {

namespace {
constexpr double kMassTolerance = 1e-12;
}

DiscreteDistribution::DiscreteDistribution(PointSeq support,
                                           std::vector<double> weights) {
  if (support.size() != weights.size() || support.empty())
    throw Error("invalid-parameters: support/weight size mismatch or empty");
  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
  support_.reserve(order.size());
  weights_.reserve(order.size());
  for (std::size_t i : order) {
    if (!support_.empty() && support_.back() == support[i])
      throw Error("invalid-parameters: duplicate support point " +
                  to_string(support[i]));
    if (weights[i] < 0)
      throw Error("invalid-parameters: negative weight");
    support_.push_back(support[i]);
    weights_.push_back(weights[i]);
  }
  double total = 0;
  for (double w : weights_) total += w;
  if (std::abs(total - 1.0) > kMassTolerance)
    throw Error("invalid-parameters: weights sum to " + std::to_string(total));
  cumulative_.resize(weights_.size());
  double acc = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    acc += weights_[i];
    cumulative_[i] = acc;
  }
  cumulative_.back() = 1.0;
  uniform_ = std::all_of(weights_.begin(), weights_.end(), [&](double w) {
    return std::abs(w - weights_[0]) <= kMassTolerance;
  });
}

DiscreteDistribution DiscreteDistribution::uniform_on(PointSeq points) {
  std::vector<double> w(points.size(),
                        points.empty() ? 0.0 : 1.0 / points.size());
  return DiscreteDistribution(std::move(points), std::move(w));
}

DiscreteDistribution DiscreteDistribution::point_mass(const DomainPoint& p) {
  return DiscreteDistribution({p}, {1.0});
}

double DiscreteDistribution::mass(const DomainPoint& p) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), p);
  if (it == support_.end() || !(*it == p)) return 0.0;
  return weights_[static_cast<std::size_t>(it - support_.begin())];
}

bool DiscreteDistribution::in_support(const DomainPoint& p) const {
  return std::binary_search(support_.begin(), support_.end(), p);
}

std::size_t DiscreteDistribution::sample_index(Rng& rng) const {
  if (uniform_) return static_cast<std::size_t>(rng.below(support_.size()));
  const double u = rng.next_double();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

const DomainPoint& DiscreteDistribution::sample(Rng& rng) const {
  return support_[sample_index(rng)];
}

PointSeq DiscreteDistribution::sample_many(std::size_t m, Rng& rng) const {
  PointSeq out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(sample(rng));
  return out;
}

double tv_distance(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  double sum = 0;
  std::size_t i = 0, j = 0;
  const auto& sa = a.support();
  const auto& sb = b.support();
  while (i < sa.size() || j < sb.size()) {
    if (j == sb.size() || (i < sa.size() && sa[i] < sb[j])) {
      sum += a.weights()[i];
      ++i;
    } else if (i == sa.size() || sb[j] < sa[i]) {
      sum += b.weights()[j];
      ++j;
    } else {
      sum += std::abs(a.weights()[i] - b.weights()[j]);
      ++i;
      ++j;
    }
  }
  return 0.5 * sum;
}

DiscreteDistribution conditional_distribution(
    const DiscreteDistribution& d,
    const std::function<bool(const DomainPoint&)>& keep) {
  PointSeq pts;
  std::vector<double> w;
  double kept = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (keep(d.support()[i])) {
      pts.push_back(d.support()[i]);
      w.push_back(d.weights()[i]);
      kept += d.weights()[i];
    }
  }
  if (kept <= 0)
    throw Error("zero-mass-conditioning: predicate keeps no mass");
  for (double& x : w) x /= kept;
  return DiscreteDistribution(std::move(pts), std::move(w));
}

DiscreteDistribution empirical_distribution(const PointSeq& sample) {
  if (sample.empty())
    throw Error("invalid-parameters: empirical distribution of empty sample");
  CollapsedPoints c = collapse_points(sample);
  std::vector<double> w(c.points.size());
  for (std::size_t i = 0; i < c.points.size(); ++i)
    w[i] = static_cast<double>(c.multiplicity[i]) / static_cast<double>(c.total);
  return DiscreteDistribution(std::move(c.points), std::move(w));
}

double gamma_no_duplicates(std::size_t m, std::size_t big_m) {
  if (big_m == 0) throw Error("invalid-parameters: gamma with M = 0");
  if (m > big_m) return 0.0;
  long double prod = 1.0L;
  for (std::size_t i = 0; i < m; ++i)
    prod *= static_cast<long double>(big_m - i) / static_cast<long double>(big_m);
  return static_cast<double>(prod);
}

}  // namespace paclab::core
