#include "paclab/unitest/collision.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <unordered_set>

#include "paclab/core/error.hpp"

namespace paclab::unitest {

PointSetView PointSetView::of_points(core::PointSeq points) {
  auto set = std::make_shared<std::unordered_set<core::DomainPoint,
                                                 core::DomainPointHash>>(
      points.begin(), points.end());
  PointSetView view;
  view.size = set->size();
  view.contains = [set](const core::DomainPoint& p) { return set->count(p) > 0; };
  return view;
}

CollisionStats collision_statistic(core::PointSeq values) {
  if (values.size() < 2)
    throw Error("sample-too-small: collision statistic needs >= 2 values");
  std::sort(values.begin(), values.end());
  CollisionStats stats;
  const std::uint64_t m = values.size();
  stats.pairs = m * (m - 1) / 2;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const std::uint64_t run = j - i;
    stats.collisions += run * (run - 1) / 2;
    i = j;
  }
  stats.statistic =
      static_cast<double>(stats.collisions) / static_cast<double>(stats.pairs);
  return stats;
}

std::size_t block_count(double delta) {
  if (!(delta > 0 && delta < 1))
    throw Error("invalid-parameters: delta must be in (0,1)");
  return static_cast<std::size_t>(std::ceil(18.0 * std::log(2.0 / delta)));
}

TesterDecision test_unif(std::size_t n, const TesterParams& params,
                         const core::PointSeq& sample) {
  if (n == 0) throw Error("invalid-parameters: empty reference set");
  if (!(params.xi > 0 && params.xi < 1))
    throw Error("invalid-parameters: xi must be in (0,1)");
  TesterDecision d;
  d.blocks = block_count(params.delta);
  d.block_size = sample.size() / d.blocks;
  if (d.block_size < 2)
    throw Error("sample-too-small: need at least 2 points per block, got " +
                std::to_string(sample.size()) + " for " +
                std::to_string(d.blocks) + " blocks");
  d.threshold = (1.0 + 2.0 * params.xi * params.xi) / static_cast<double>(n);
  for (std::size_t b = 0; b < d.blocks; ++b) {
    core::PointSeq block(sample.begin() + b * d.block_size,
                         sample.begin() + (b + 1) * d.block_size);
    const CollisionStats stats = collision_statistic(std::move(block));
    if (stats.statistic < d.threshold) ++d.blocks_accepting;
  }
  d.accept = 2 * d.blocks_accepting >= d.blocks;
  return d;
}

TesterDecision m_test_unif(const PointSetView& y, const TesterParams& params,
                           const core::PointSeq& sample) {
  for (const auto& p : sample) {
    if (!y.contains(p)) {
      TesterDecision d;
      d.accept = false;
      d.blocks = block_count(params.delta);
      d.threshold =
          (1.0 + 0.5 * params.xi * params.xi) / static_cast<double>(y.size);
      return d;
    }
  }
  TesterParams halved = params;
  halved.xi = params.xi / 2.0;
  return test_unif(y.size, halved, sample);
}

std::uint64_t m_test_sample_bound(std::size_t n, double xi, double delta) {
  if (n == 0 || !(xi > 0 && xi < 1) || !(delta > 0 && delta < 1))
    throw Error("invalid-parameters: m_test_sample_bound");
  const double value = 18.0 * 64.0 * std::sqrt(static_cast<double>(n)) *
                       std::log(2.0 / delta) / (xi * xi);
  return static_cast<std::uint64_t>(std::ceil(value));
}

}  // namespace paclab::unitest
