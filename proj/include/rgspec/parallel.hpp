#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rgspec {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Data-parallel loop over [0, n). The body must write only to slot i of shared
// output so the result is identical for any thread count (including 1, which is
// the serial reference path used in tests and the benchmark).
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn, bool parallel = true) {
#ifdef _OPENMP
  if (parallel && n > 1) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)parallel;
#endif
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace rgspec
