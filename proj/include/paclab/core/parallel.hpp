#pragma once

#include <cstdlib>
#include <string>

#include <omp.h>

namespace paclab::core {

// Worker count: PACLAB_WORKERS env var if set (>= 1), else the OpenMP default.
inline int worker_count() {
  if (const char* env = std::getenv("PACLAB_WORKERS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return omp_get_max_threads();
}

// Runs fn(t) for t in [0, trials). Each iteration must write only to its own
// slot of a preallocated result vector; the caller reduces sequentially
// afterwards, which keeps outputs byte-identical between the serial reference
// path and the OpenMP path at any worker count.
template <class F>
void for_each_trial(std::size_t trials, bool parallel, F&& fn) {
  if (!parallel) {
    for (std::size_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  const int workers = worker_count();
  const long long n = static_cast<long long>(trials);
#pragma omp parallel for schedule(static) num_threads(workers)
  for (long long t = 0; t < n; ++t) fn(static_cast<std::size_t>(t));
}

}  // namespace paclab::core
