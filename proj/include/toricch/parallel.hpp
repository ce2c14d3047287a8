#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toricch {

// Worker count for the parallel kernels: TORIC_CH_THREADS caps it, OpenMP's
// default applies otherwise, and serial builds always report 1.
inline int effective_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("TORIC_CH_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

}  // namespace toricch
