// OpenMP map kernel.  Each body(i) must write only to its own output slot;
// results are placed by index, so parallel and serial runs are bit-identical.
#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eqmod {

template <class Body>
void parallel_for_index(std::size_t n, bool parallel, Body&& body) {
#ifdef _OPENMP
    if (parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace eqmod
