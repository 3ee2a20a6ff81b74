#pragma once

// OpenMP shim. Kernels include this header instead of <omp.h> so the library
// still builds (serially) when OpenMP is unavailable.

#ifdef _OPENMP
#include <omp.h>
#define CLUSTERKIT_OMP(x) _Pragma(#x)
#else
#define CLUSTERKIT_OMP(x)
#endif

namespace clusterkit::parallel {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace clusterkit::parallel
