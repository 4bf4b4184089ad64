#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "paclab/construct/row_class.hpp"
#include "paclab/construct/set_system.hpp"
#include "paclab/construct/tagged.hpp"
#include "paclab/core/error.hpp"
#include "paclab/core/sample.hpp"

using namespace paclab;
using core::DomainPoint;

TEST_CASE("row class geometry and canonical members") {
  construct::RowClass row(10, 3);
  CHECK(row.name() == "row-10-M3");
  CHECK(row.n() == 10);
  CHECK(row.big_m() == 3);
  CHECK(row.point(5) == DomainPoint{10, 5, 0});
  CHECK(row.on_row(row.point(0)));
  CHECK_FALSE(row.on_row({10, 10, 0}));
  CHECK_FALSE(row.on_row({3, 3, 0}));

  auto d = row.distribution();
  CHECK(d.size() == 10);
  CHECK(d.mass(row.point(7)) == doctest::Approx(0.1));

  core::Hypothesis h1 = row.as_hypothesis(row.canonical_hypothesis(1));
  CHECK(h1(row.point(0)) == 1);
  CHECK(h1(row.point(2)) == 1);
  CHECK(h1(row.point(3)) == 0);
  CHECK(h1({5, 5, 0}) == 0);  // off the row everything is 0

  core::Hypothesis h0 = row.as_hypothesis(row.canonical_hypothesis(0));
  CHECK(h0(row.point(0)) == 0);
  CHECK(h0(row.point(9)) == 1);

  CHECK_THROWS_AS(construct::RowClass(10, 5), Error);  // needs 2M < n
  CHECK_THROWS_AS(construct::RowClass(10, 0), Error);
}

TEST_CASE("row class consistency closed form") {
  construct::RowClass row(10, 3);
  auto lab = [&](std::int64_t c, std::uint8_t y) {
    return core::LabeledExample{row.point(c), y};
  };
  // Realizable: three zeros can be the whole minority-0 set.
  CHECK(row.consistent({lab(0, 0), lab(1, 0), lab(2, 0), lab(3, 1)}));
  // Four zeros and four ones fit neither family at M = 3.
  CHECK_FALSE(row.consistent({lab(0, 0), lab(1, 0), lab(2, 0), lab(3, 0),
                              lab(4, 1), lab(5, 1), lab(6, 1), lab(7, 1)}));
  // Off-row points must be labeled 0.
  CHECK(row.consistent({{DomainPoint{3, 3, 0}, 0}, lab(0, 1)}));
  CHECK_FALSE(row.consistent({{DomainPoint{3, 3, 0}, 1}}));
  // Contradictory labels on one point.
  CHECK_FALSE(row.consistent({lab(0, 0), lab(0, 1)}));
}

TEST_CASE("row class projections agree with explicit enumeration") {
  construct::RowClass row(5, 1);
  core::ExplicitClass full = construct::enumerate_row_class(row);
  CHECK(full.size() == 10);  // 2 * C(5,1)

  core::PointSeq pts;
  for (std::int64_t c = 0; c < 5; ++c) pts.push_back(row.point(c));

  auto a = row.behaviors(pts, 4096);
  auto b = full.behaviors(pts, 4096);
  CHECK(a == b);
  CHECK(a.size() == 10);

  // Shattering: distinct row points up to min(n - M, 2M + 1), never with
  // off-row points. Cross-check against the projection on a small row where
  // the whole class enumerates.
  construct::RowClass wide(10, 3);
  core::PointSeq sub;
  for (std::int64_t c = 0; c < 7; ++c) sub.push_back(wide.point(c));
  CHECK(wide.shatters(sub));
  sub.push_back(wide.point(7));
  CHECK_FALSE(wide.shatters(sub));
  CHECK_FALSE(wide.shatters({wide.point(0), DomainPoint{1, 1, 0}}));

  construct::RowClass small(7, 2);
  core::ExplicitClass small_full = construct::enumerate_row_class(small);
  core::PointSeq probe;
  for (std::int64_t c = 0; c < 7; ++c) {
    probe.push_back(small.point(c));
    bool all_patterns = small_full.behaviors(probe, 1 << 14).size() ==
                        (std::size_t{1} << probe.size());
    CHECK(small.shatters(probe) == all_patterns);
    CHECK(small.shatters(probe) ==
          (static_cast<std::int64_t>(probe.size()) <= 5));  // min(n-M, 2M+1)
  }

  CHECK_THROWS_AS(construct::enumerate_row_class(construct::RowClass(100, 10)),
                  Error);
}

TEST_CASE("worst consistent loss matches brute force over the full class") {
  construct::RowClass row(6, 2);
  core::ExplicitClass full = construct::enumerate_row_class(row);
  REQUIRE(full.size() == 30);
  auto d = row.distribution();

  construct::RowHypothesis truth_struct = row.canonical_hypothesis(1);
  core::Hypothesis truth = row.as_hypothesis(truth_struct);

  core::Rng rng(77, 0);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t m = trial % 5;
    core::LabeledSeq sample = core::draw_labeled(d, truth, m, rng);

    double brute = 0;
    for (std::size_t h = 0; h < full.size(); ++h) {
      core::Hypothesis cand = full.member(h);
      if (core::loss_sample(cand, sample) > 0) continue;  // not consistent
      brute = std::max(brute, core::loss_distribution(cand, d, truth));
    }

    double closed = row.worst_consistent_loss(sample, truth_struct);
    CHECK(closed == doctest::Approx(brute).epsilon(1e-9));

    construct::RowHypothesis witness = row.canonical_worst(sample, truth_struct);
    core::Hypothesis wh = row.as_hypothesis(witness);
    CHECK(core::loss_sample(wh, sample) == 0.0);
    CHECK(core::loss_distribution(wh, d, truth) ==
          doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("set systems sample, verify and label") {
  construct::SetSystemParams p;
  p.universe = 64;
  p.set_size = 8;
  p.count = 16;
  p.max_intersection = 4;
  core::Rng rng(5, 0);
  construct::SetSystem sys = construct::sample_set_system(p, rng);
  CHECK(construct::verify_set_system(sys));
  CHECK(sys.sets.size() == 16);
  for (const auto& s : sys.sets) {
    CHECK(s.size() == 8);
    CHECK(std::is_sorted(s.begin(), s.end()));
  }
  CHECK(sys.set_points(0).size() == 8);
  CHECK(sys.set_distribution(3).mass(sys.point(sys.sets[3][0])) ==
        doctest::Approx(1.0 / 8));

  auto labelings = construct::sample_labelings(sys, rng);
  REQUIRE(labelings.size() == 16);
  construct::SetSystemClass cls(sys, labelings);
  CHECK(cls.enumerable());
  CHECK(cls.size() == 16);
  CHECK(cls.name() == "setsystem-u64-n8-k16");

  // Member j: labeling bits on its own set, constant 1 elsewhere.
  core::Hypothesis h0 = cls.member(0);
  for (std::size_t k = 0; k < sys.sets[0].size(); ++k) {
    CHECK(h0(sys.point(sys.sets[0][k])) == ((labelings[0] >> k) & 1));
  }
  for (std::int64_t c : sys.sets[1]) {
    bool in_own = std::binary_search(sys.sets[0].begin(), sys.sets[0].end(), c);
    if (!in_own) CHECK(h0(sys.point(c)) == 1);
  }

  // Container balance bookkeeping on a singleton tuple.
  construct::ContainerBalance bal =
      construct::check_container_balance(cls, {sys.sets[0][0]}, 1.0);
  std::uint64_t sum = 0;
  for (auto v : bal.per_labeling) sum += v;
  CHECK(sum == bal.containers);
  CHECK(bal.per_labeling.size() == 2);
}

TEST_CASE("well separated family from a set system") {
  construct::SetSystemParams p;
  p.universe = 128;
  p.set_size = 16;
  p.count = 8;
  p.max_intersection = 8;
  core::Rng rng(6, 0);
  construct::SetSystem sys = construct::sample_set_system(p, rng);
  construct::WellSepFamily fam = construct::wellsep_family_from_setsystem(sys);
  CHECK(fam.members.size() == 8);
  CHECK(fam.c < 1.0);
  CHECK(construct::verify_well_separated(fam));
  // Separation c bounds the cross mass, so TV stays at least 1 - c.
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    for (std::size_t j = 0; j < fam.members.size(); ++j) {
      if (i == j) continue;
      CHECK(core::tv_distance(fam.members[i], fam.members[j]) >=
            1.0 - fam.c - 1e-12);
    }
  }
}

TEST_CASE("tagged replicas keep the learning problem per slice") {
  construct::SetSystemParams p;
  p.universe = 32;
  p.set_size = 4;
  p.count = 4;
  p.max_intersection = 2;
  core::Rng rng(7, 0);
  construct::SetSystem sys = construct::sample_set_system(p, rng);
  auto labelings = construct::sample_labelings(sys, rng);
  auto base = std::make_shared<construct::SetSystemClass>(sys, labelings);
  construct::WellSepFamily fam = construct::wellsep_family_from_setsystem(sys);

  construct::TaggedFamily tagged = construct::tagged_family(base, fam.members, 3);
  CHECK(tagged.members.size() == 12);
  CHECK(tagged.hypothesis_class->size() == base->size());
  CHECK(tagged.hypothesis_class->name() == base->name() + "-tagged");

  // Members ignore the tag: same labels on every slice.
  core::Hypothesis th = tagged.hypothesis_class->member(2);
  core::Hypothesis bh = base->member(2);
  for (std::int64_t c : sys.sets[2]) {
    DomainPoint p1{0, c, 1}, p2{0, c, 2};
    CHECK(th(p1) == bh(sys.point(c)));
    CHECK(th(p1) == th(p2));
  }

  // Each tagged distribution lives on exactly one tag slice.
  for (std::size_t i = 0; i < tagged.members.size(); ++i) {
    std::int64_t tag = static_cast<std::int64_t>(i / fam.members.size()) + 1;
    for (const auto& q : tagged.members[i].support()) CHECK(q.tag == tag);
  }

  // Distinct slices of the same base distribution are disjoint, so the
  // family really grows.
  CHECK(core::tv_distance(tagged.members[0],
                          tagged.members[fam.members.size()]) ==
        doctest::Approx(1.0));

  // Projection across slices matches the base class on the stripped points.
  core::PointSeq cross = {DomainPoint{0, sys.sets[0][0], 1},
                          DomainPoint{0, sys.sets[0][1], 2},
                          DomainPoint{0, sys.sets[0][0], 2}};
  auto masks = tagged.hypothesis_class->behaviors(cross, 4096);
  for (auto mk : masks) {
    // Copies of one base point must agree across tags.
    CHECK(((mk >> 0) & 1) == ((mk >> 2) & 1));
  }
  CHECK_THROWS_AS(construct::tagged_family(nullptr, fam.members, 2), Error);
}
