#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcaspan {

/// Worker count for a kernel: n_threads when positive, otherwise the
/// OpenMP default (1 in non-OpenMP builds).
inline int resolve_threads(int n_threads) {
  if (n_threads > 0) return n_threads;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lcaspan
