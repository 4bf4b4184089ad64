#include "paclab/construct/set_system.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "paclab/core/error.hpp"

namespace paclab::construct {

using core::DomainPoint;
using core::PointSeq;

core::PointSeq SetSystem::set_points(std::size_t index) const {
  if (index >= sets.size()) throw Error("invalid-parameters: set index");
  PointSeq pts;
  pts.reserve(sets[index].size());
  for (std::int64_t c : sets[index]) pts.push_back(point(c));
  return pts;
}

core::DiscreteDistribution SetSystem::set_distribution(std::size_t index) const {
  return core::DiscreteDistribution::uniform_on(set_points(index));
}

namespace {

std::vector<std::int64_t> sample_subset(std::int64_t universe, std::int64_t k,
                                        core::Rng& rng) {
  // Floyd's algorithm: k distinct values in [0, universe).
  std::set<std::int64_t> chosen;
  for (std::int64_t j = universe - k; j < universe; ++j) {
    const std::int64_t t =
        static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j + 1)));
    chosen.insert(chosen.count(t) ? j : t);
  }
  return {chosen.begin(), chosen.end()};
}

std::int64_t intersection_size(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b) {
  std::int64_t n = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else
      ++n, ++i, ++j;
  }
  return n;
}

}  // namespace

SetSystem sample_set_system(const SetSystemParams& params, core::Rng& rng) {
  if (params.set_size < 1 || params.set_size > params.universe ||
      params.count < 1 || params.max_intersection < 0)
    throw Error("invalid-parameters: set system parameters");
  for (int attempt = 0; attempt < params.retry_cap; ++attempt) {
    SetSystem sys;
    sys.params = params;
    sys.retries_used = attempt;
    bool ok = true;
    for (std::int64_t i = 0; i < params.count && ok; ++i) {
      auto s = sample_subset(params.universe, params.set_size, rng);
      for (const auto& other : sys.sets) {
        if (intersection_size(s, other) > params.max_intersection) {
          ok = false;
          break;
        }
      }
      if (ok) sys.sets.push_back(std::move(s));
    }
    if (ok) return sys;
  }
  throw Error("solver-failure: set system rejected " +
              std::to_string(params.retry_cap) + " times");
}

bool verify_set_system(const SetSystem& system) {
  const auto& p = system.params;
  if (static_cast<std::int64_t>(system.sets.size()) != p.count) return false;
  for (const auto& s : system.sets) {
    if (static_cast<std::int64_t>(s.size()) != p.set_size) return false;
    if (!std::is_sorted(s.begin(), s.end())) return false;
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    if (s.front() < 0 || s.back() >= p.universe) return false;
  }
  for (std::size_t i = 0; i < system.sets.size(); ++i)
    for (std::size_t j = i + 1; j < system.sets.size(); ++j)
      if (intersection_size(system.sets[i], system.sets[j]) > p.max_intersection)
        return false;
  return true;
}

std::vector<std::uint64_t> sample_labelings(const SetSystem& system,
                                            core::Rng& rng) {
  if (system.params.set_size > 63)
    throw Error("invalid-parameters: labelings need set_size <= 63");
  std::vector<std::uint64_t> out;
  out.reserve(system.sets.size());
  for (std::size_t i = 0; i < system.sets.size(); ++i) {
    std::uint64_t bits = 0;
    for (std::int64_t j = 0; j < system.params.set_size; ++j)
      if (rng.bernoulli(0.5)) bits |= std::uint64_t{1} << j;
    out.push_back(bits);
  }
  return out;
}

SetSystemClass::SetSystemClass(SetSystem system,
                               std::vector<std::uint64_t> labelings)
    : system_(std::move(system)), labelings_(std::move(labelings)) {
  if (labelings_.size() != system_.sets.size())
    throw Error("invalid-parameters: one labeling per set required");
}

std::string SetSystemClass::name() const {
  return "setsystem-u" + std::to_string(system_.params.universe) + "-n" +
         std::to_string(system_.params.set_size) + "-k" +
         std::to_string(system_.params.count);
}

core::Hypothesis SetSystemClass::member(std::size_t index) const {
  if (index >= size()) throw Error("invalid-parameters: hypothesis index");
  const auto cols = system_.sets[index];
  const std::uint64_t bits = labelings_[index];
  return core::Hypothesis{[cols, bits](const DomainPoint& p) -> std::uint8_t {
    if (p.row != 0 || p.tag != 0) return 1;
    const auto it = std::lower_bound(cols.begin(), cols.end(), p.col);
    if (it == cols.end() || *it != p.col) return 1;
    const auto j = static_cast<std::size_t>(it - cols.begin());
    return (bits >> j) & 1u;
  }};
}

ContainerBalance check_container_balance(const SetSystemClass& cls,
                                         const std::vector<std::int64_t>& tuple,
                                         double tolerance) {
  if (tuple.size() > 16)
    throw Error("invalid-parameters: balance check tuple too large");
  ContainerBalance out;
  out.per_labeling.assign(std::size_t{1} << tuple.size(), 0);
  const auto& system = cls.system();
  for (std::size_t i = 0; i < system.sets.size(); ++i) {
    const auto& s = system.sets[i];
    bool contains_all = true;
    std::uint64_t pattern = 0;
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      const auto it = std::lower_bound(s.begin(), s.end(), tuple[j]);
      if (it == s.end() || *it != tuple[j]) {
        contains_all = false;
        break;
      }
      const auto pos = static_cast<std::size_t>(it - s.begin());
      if ((cls.labelings()[i] >> pos) & 1u) pattern |= std::uint64_t{1} << j;
    }
    if (!contains_all) continue;
    ++out.containers;
    ++out.per_labeling[pattern];
  }
  const double expect = static_cast<double>(out.containers) /
                        static_cast<double>(out.per_labeling.size());
  out.max_relative_deviation = 0;
  for (std::uint64_t c : out.per_labeling) {
    const double dev = expect > 0
                           ? std::abs(static_cast<double>(c) - expect) / expect
                           : (c > 0 ? 1.0 : 0.0);
    out.max_relative_deviation = std::max(out.max_relative_deviation, dev);
  }
  out.balanced = out.containers > 0 && out.max_relative_deviation <= tolerance;
  return out;
}

WellSepFamily wellsep_family_from_setsystem(const SetSystem& system) {
  WellSepFamily family;
  for (std::size_t i = 0; i < system.sets.size(); ++i)
    family.members.push_back(system.set_distribution(i));
  std::int64_t worst = 0;
  for (std::size_t i = 0; i < system.sets.size(); ++i)
    for (std::size_t j = i + 1; j < system.sets.size(); ++j)
      worst = std::max(worst,
                       intersection_size(system.sets[i], system.sets[j]));
  family.c = static_cast<double>(worst) /
             static_cast<double>(system.params.set_size);
  if (!(family.c < 1.0))
    throw Error("invalid-parameters: family is not separated (c >= 1)");
  if (family.c == 0.0) family.c = 0.5 / static_cast<double>(system.params.set_size);
  return family;
}

bool verify_well_separated(const WellSepFamily& family) {
  if (!(family.c > 0 && family.c < 1)) return false;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    for (std::size_t j = 0; j < family.members.size(); ++j) {
      if (i == j) continue;
      double mass = 0;
      const auto& di = family.members[i];
      const auto& dj = family.members[j];
      for (std::size_t t = 0; t < dj.size(); ++t)
        if (di.in_support(dj.support()[t])) mass += dj.weights()[t];
      if (mass > family.c + 1e-12) return false;
    }
  }
  return true;
}

}  // namespace paclab::construct
