#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stokes {

inline bool has_omp_support() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int available_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    int lim = omp_get_thread_limit();
    return lim < n ? lim : n;
#else
    return 1;
#endif
}

}  // namespace stokes
