#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "paclab/core/point.hpp"
#include "paclab/core/random.hpp"

namespace paclab::core {

// Finite distribution over domain points. Support is stored sorted and
// distinct; weights are nonnegative and sum to 1 within 1e-12.
class DiscreteDistribution {
 public:
  DiscreteDistribution() = default;

  // Points need not be sorted; duplicates are invalid-parameters.
  DiscreteDistribution(PointSeq support, std::vector<double> weights);

  static DiscreteDistribution uniform_on(PointSeq points);
  static DiscreteDistribution point_mass(const DomainPoint& p);

  const PointSeq& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return support_.size(); }

  // 0 for points outside the support.
  double mass(const DomainPoint& p) const;
  bool in_support(const DomainPoint& p) const;

  std::size_t sample_index(Rng& rng) const;
  const DomainPoint& sample(Rng& rng) const;
  PointSeq sample_many(std::size_t m, Rng& rng) const;

 private:
  PointSeq support_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
  bool uniform_ = false;
};

// Total variation distance, 0.5 * sum over the union support of |p - q|.
double tv_distance(const DiscreteDistribution& a, const DiscreteDistribution& b);

// D conditioned on the predicate being true; zero-mass-conditioning if the
// kept mass is 0.
DiscreteDistribution conditional_distribution(
    const DiscreteDistribution& d,
    const std::function<bool(const DomainPoint&)>& keep);

// Empirical distribution of a point sequence (counts / length).
DiscreteDistribution empirical_distribution(const PointSeq& sample);

// Probability that m independent draws from a uniform distribution over M
// points are pairwise distinct: M(M-1)...(M-m+1) / M^m. Zero when m > M.
double gamma_no_duplicates(std::size_t m, std::size_t big_m);

}  // namespace paclab::core
