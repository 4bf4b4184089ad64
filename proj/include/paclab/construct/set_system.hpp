#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "paclab/core/distribution.hpp"
#include "paclab/core/hypothesis.hpp"
#include "paclab/core/random.hpp"

namespace paclab::construct {

struct SetSystemParams {
  std::int64_t universe = 256;       // points are (0, col) for col < universe
  std::int64_t set_size = 16;
  std::int64_t count = 64;           // number of sets
  std::int64_t max_intersection = 8; // pairwise overlap bound
  int retry_cap = 50;
};

struct SetSystem {
  SetSystemParams params;
  std::vector<std::vector<std::int64_t>> sets;  // sorted columns, one per set
  int retries_used = 0;

  core::DomainPoint point(std::int64_t col) const { return {0, col, 0}; }
  core::PointSeq set_points(std::size_t index) const;
  core::DiscreteDistribution set_distribution(std::size_t index) const;
};

// Draws `count` uniform size-`set_size` subsets of the universe, redrawing the
// whole system when some pair overlaps in more than max_intersection points.
// Throws solver-failure after retry_cap failed attempts.
SetSystem sample_set_system(const SetSystemParams& params, core::Rng& rng);

// Recheck sizes, sortedness, range and the pairwise intersection bound.
bool verify_set_system(const SetSystem& system);

// One random labeling per set: bit j labels the set's j-th smallest column.
std::vector<std::uint64_t> sample_labelings(const SetSystem& system,
                                            core::Rng& rng);

// h_j labels its own set by labelings[j] and everything else 1.
class SetSystemClass : public core::HypothesisClass {
 public:
  SetSystemClass(SetSystem system, std::vector<std::uint64_t> labelings);

  std::string name() const override;
  bool enumerable() const override { return true; }
  std::size_t size() const override { return system_.sets.size(); }
  core::Hypothesis member(std::size_t index) const override;

  const SetSystem& system() const { return system_; }
  const std::vector<std::uint64_t>& labelings() const { return labelings_; }

 private:
  SetSystem system_;
  std::vector<std::uint64_t> labelings_;
};

// For a point tuple T: how many sets contain all of T, and how those
// containers split across the 2^|T| labelings of T.
struct ContainerBalance {
  std::uint64_t containers = 0;
  std::vector<std::uint64_t> per_labeling;  // size 2^|T|
  double max_relative_deviation = 0;        // vs containers / 2^|T|
  bool balanced = false;
};

ContainerBalance check_container_balance(const SetSystemClass& cls,
                                         const std::vector<std::int64_t>& tuple,
                                         double tolerance);

// Family of uniform distributions on the sets; c is the largest pairwise
// overlap fraction |Si n Sj| / set_size, which bounds the mass any member
// puts on another member's support. Requires c < 1.
struct WellSepFamily {
  std::vector<core::DiscreteDistribution> members;
  double c = 0;
};

WellSepFamily wellsep_family_from_setsystem(const SetSystem& system);

// Validates D'[supp(D)] <= c < 1 for all ordered pairs of distinct members.
bool verify_well_separated(const WellSepFamily& family);

}  // namespace paclab::construct
