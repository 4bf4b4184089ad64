// Timing harness comparing the serial reference path against the OpenMP path
// on the two Monte-Carlo kernels that dominate real runs. The two paths must
// agree bitwise (trials are stream-addressed, reduction is sequential), so
// the table doubles as an equality check at the current worker count.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <vector>

#include "paclab/certify/certifier.hpp"
#include "paclab/construct/row_class.hpp"
#include "paclab/core/parallel.hpp"
#include "paclab/core/random.hpp"
#include "paclab/harness/estimate.hpp"
#include "paclab/learners/learners.hpp"

using namespace paclab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(const char* kernel, std::uint64_t trials, double serial,
            double parallel, bool identical) {
  std::printf("%-22s %8llu trials  serial %8.3fs  parallel %8.3fs  "
              "speedup %5.2fx  identical %s\n",
              kernel, static_cast<unsigned long long>(trials), serial,
              parallel, parallel > 0 ? serial / parallel : 0.0,
              identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t trials = 2000;
  if (argc > 1) {
    long long v = std::atoll(argv[1]);
    if (v < 1) {
      std::fprintf(stderr, "usage: %s [trials >= 1]\n", argv[0]);
      return 2;
    }
    trials = static_cast<std::uint64_t>(v);
  }
  core::RandomSource rs{7};
  std::printf("workers: %d\n", core::worker_count());

  // Kernel 1: error-rate estimation for the majority learner on a mid-size
  // row class. Each trial draws and trains, so this stresses the sampler and
  // the learner path together.
  {
    auto row = std::make_shared<construct::RowClass>(2000, 40);
    std::vector<core::Hypothesis> truths = {
        row->as_hypothesis(row->canonical_hypothesis(1)),
        row->as_hypothesis(row->canonical_hypothesis(0))};
    core::DiscreteDistribution d = row->distribution();

    auto t0 = std::chrono::steady_clock::now();
    harness::ErrorEstimate serial = harness::estimate_error_rate(
        learners::make_majority_learner(), truths, d, 2048, trials, rs, 0xB1,
        false);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    harness::ErrorEstimate par = harness::estimate_error_rate(
        learners::make_majority_learner(), truths, d, 2048, trials, rs, 0xB1,
        true);
    double tp = seconds_since(t0);

    report("error-rate/majority", trials, ts, tp,
           serial.estimate == par.estimate &&
               serial.std_error == par.std_error);
  }

  // Kernel 2: expected certificate of the gated row certifier, which is
  // sampling plus the block-collision uniformity test per trial.
  {
    construct::RowClass row(100, 25);
    std::uint64_t cert_trials = std::max<std::uint64_t>(trials / 25, 8);
    certify::Certifier cert = certify::make_majority_certifier(row, 0.25, 1);
    core::DiscreteDistribution d = row.distribution();
    const std::size_t sample_size = 200000;

    auto t0 = std::chrono::steady_clock::now();
    certify::MeanEstimate serial = certify::expected_certificate(
        cert, d, sample_size, cert_trials, rs, 0xB2, false);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    certify::MeanEstimate par = certify::expected_certificate(
        cert, d, sample_size, cert_trials, rs, 0xB2, true);
    double tp = seconds_since(t0);

    report("certificate/tester", cert_trials, ts, tp,
           serial.mean == par.mean && serial.std_error == par.std_error);
  }
  return 0;
}
