#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "paclab/certify/audit.hpp"
#include "paclab/certify/certifier.hpp"
#include "paclab/core/error.hpp"

using namespace paclab;
using core::DomainPoint;

namespace {

core::PointSeq grid_points(std::size_t k) {
  core::PointSeq pts;
  for (std::size_t j = 0; j < k; ++j) {
    pts.push_back({0, static_cast<std::int64_t>(j), 0});
  }
  return pts;
}

}  // namespace

TEST_CASE("certifier gate equals the halved tester bound") {
  CHECK(certify::certifier_gate(100, 0.25) == 1533131u);
  CHECK(certify::certifier_gate(100, 0.25) ==
        unitest::m_test_sample_bound(100, 0.125, 0.25));
}

TEST_CASE("gated certifier rejects bad parameters") {
  auto y = unitest::PointSetView::of_points(grid_points(4));
  certify::GatedCertifierParams ok;
  ok.domain_size = 4;
  ok.xi = 0.25;
  ok.pass_value = 0.75;

  auto broken = ok;
  broken.xi = 0;
  CHECK_THROWS_AS(certify::make_gated_certifier(y, broken), Error);
  broken = ok;
  broken.xi = 1.0;
  CHECK_THROWS_AS(certify::make_gated_certifier(y, broken), Error);
  broken = ok;
  broken.pass_value = 0;
  CHECK_THROWS_AS(certify::make_gated_certifier(y, broken), Error);
  broken = ok;
  broken.pass_value = 1.5;
  CHECK_THROWS_AS(certify::make_gated_certifier(y, broken), Error);
  broken = ok;
  broken.domain_size = 5;  // view still holds 4 points
  CHECK_THROWS_AS(certify::make_gated_certifier(y, broken), Error);
}

TEST_CASE("majority certifier pinned decisions") {
  construct::RowClass row(100, 25);
  CHECK_THROWS_AS(certify::make_majority_certifier(row, 0.4, 0), Error);

  // min_sample far below the honest gate to keep the test fast; the tester
  // itself concentrates hard at this size (about six sigma per block).
  certify::Certifier cert = certify::make_majority_certifier(row, 0.25, 10000);
  core::RandomSource rs{2026};
  core::Rng rng = rs.stream(0);
  core::PointSeq sample = row.distribution().sample_many(100000, rng);
  CHECK(cert(sample) == doctest::Approx(0.75));

  // Too few points: the certifier stays at its trivial level.
  core::PointSeq tiny(sample.begin(), sample.begin() + 9999);
  CHECK(cert(tiny) == doctest::Approx(1.0));

  // One off-row point fails the membership gate no matter the rest.
  core::PointSeq tainted = sample;
  tainted[123] = DomainPoint{0, 0, 0};
  CHECK(cert(tainted) == doctest::Approx(1.0));
}

TEST_CASE("set certifier pinned decisions") {
  core::PointSeq pts = grid_points(16);
  CHECK_THROWS_AS(certify::make_set_certifier(pts, 0.2, 0), Error);

  certify::Certifier cert = certify::make_set_certifier(pts, 0.125, 10000);
  auto uniform = core::DiscreteDistribution::uniform_on(pts);
  core::RandomSource rs{2027};
  core::Rng rng = rs.stream(0);
  core::PointSeq sample = uniform.sample_many(200000, rng);
  CHECK(cert(sample) == doctest::Approx(0.75));

  // Point mass stays inside the set, so only the collision test can veto it.
  core::PointSeq spike(200000, pts[3]);
  CHECK(cert(spike) == doctest::Approx(1.0));
}

TEST_CASE("expected certificate moments and determinism") {
  auto uniform = core::DiscreteDistribution::uniform_on(grid_points(8));
  core::RandomSource rs{7};

  certify::Certifier flat = [](const core::PointSeq&) { return 0.7; };
  auto est = certify::expected_certificate(flat, uniform, 5, 50, rs, 1, false);
  CHECK(est.trials == 50);
  CHECK(est.mean == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(est.std_error ==
        doctest::Approx(std::sqrt(est.mean * (1 - est.mean) / 50.0)));

  // A sample-dependent certificate must not care about the worker count.
  certify::Certifier hashed = [](const core::PointSeq& s) {
    std::uint64_t acc = 1;
    for (const auto& p : s) acc = acc * 31 + static_cast<std::uint64_t>(p.col);
    return static_cast<double>(acc % 97 + 1) / 97.0;
  };
  auto serial =
      certify::expected_certificate(hashed, uniform, 12, 64, rs, 9, false);
  auto parallel =
      certify::expected_certificate(hashed, uniform, 12, 64, rs, 9, true);
  CHECK(serial.mean == parallel.mean);
  CHECK(serial.std_error == parallel.std_error);

  CHECK_THROWS_AS(certify::expected_certificate(flat, uniform, 5, 0, rs, 1, false),
                  Error);
}

TEST_CASE("soundness audit separates sound from broken certifiers") {
  auto uniform = core::DiscreteDistribution::uniform_on(grid_points(4));
  std::vector<certify::BatteryEntry> battery;
  battery.push_back({"uniform", uniform});
  battery.push_back({"spike", core::DiscreteDistribution::point_mass(
                                  grid_points(4)[0])});
  std::vector<std::uint64_t> sizes = {10, 20};
  core::RandomSource rs{11};
  certify::AuditParams params;
  params.certificate_trials = 20;
  params.parallel = false;

  certify::Certifier honest = [](const core::PointSeq&) { return 0.5; };
  auto low_error = [](const core::DiscreteDistribution&, std::size_t) {
    return certify::MeanEstimate{0.2, 0.01, 100};
  };
  auto report =
      certify::soundness_audit(honest, battery, sizes, low_error, params, rs);
  CHECK(report.all_sound);
  REQUIRE(report.rows.size() == 4);
  // Battery-major ordering, sample sizes inner.
  CHECK(report.rows[0].distribution == "uniform");
  CHECK(report.rows[0].sample_size == 10);
  CHECK(report.rows[1].sample_size == 20);
  CHECK(report.rows[2].distribution == "spike");
  for (const auto& row : report.rows) {
    CHECK(row.certificate_mean == doctest::Approx(0.5));
    CHECK(row.learner_error == doctest::Approx(0.2));
    CHECK(row.slack == doctest::Approx(0.3));
    CHECK(row.tolerance ==
          doctest::Approx(3.0 * std::sqrt(row.certificate_se *
                                              row.certificate_se +
                                          0.01 * 0.01)));
    CHECK(row.sound);
  }

  // Certificate far below the true error: every row must be flagged.
  certify::Certifier lying = [](const core::PointSeq&) { return 0.1; };
  auto high_error = [](const core::DiscreteDistribution&, std::size_t) {
    return certify::MeanEstimate{0.5, 0.005, 100};
  };
  report =
      certify::soundness_audit(lying, battery, sizes, high_error, params, rs);
  CHECK_FALSE(report.all_sound);
  for (const auto& row : report.rows) {
    CHECK_FALSE(row.sound);
    CHECK(row.slack == doctest::Approx(-0.4));
  }

  CHECK_THROWS_AS(
      certify::soundness_audit(honest, {}, sizes, low_error, params, rs),
      Error);
  CHECK_THROWS_AS(
      certify::soundness_audit(honest, battery, {}, low_error, params, rs),
      Error);
}
