#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace credo {

// Runs `per_case(i)` for i in [0, count) and collects the results by index,
// so the output is identical for every thread count. threads == 1 is the
// serial reference path; threads <= 0 means "let OpenMP decide".
// `per_case` must not throw; suite kernels record errors in their results.
template <class R, class Fn>
std::vector<R> run_batch(size_t count, int threads, Fn&& per_case) {
    std::vector<R> out(count);
#ifdef _OPENMP
    if (threads != 1) {
        if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (long long i = 0; i < static_cast<long long>(count); ++i)
                out[static_cast<size_t>(i)] = per_case(static_cast<size_t>(i));
        } else {
#pragma omp parallel for schedule(dynamic)
            for (long long i = 0; i < static_cast<long long>(count); ++i)
                out[static_cast<size_t>(i)] = per_case(static_cast<size_t>(i));
        }
        return out;
    }
#else
    (void)threads;
#endif
    for (size_t i = 0; i < count; ++i) out[i] = per_case(i);
    return out;
}

inline int batch_max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace credo
