#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ots {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(i) for i in [0, n). The parallel path requires fn to write only to
// per-index slots; callers merge results in index order so output does not
// depend on scheduling. The serial path is the reference used in tests.
template <class F>
void parallel_for(std::size_t n, bool parallel, F&& fn) {
#ifdef _OPENMP
  if (parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace ots
