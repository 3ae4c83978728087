#pragma once

#include <exception>
#include <vector>

#ifdef REPRINGS_OPENMP
#include <omp.h>
#endif

namespace reprings {

inline bool parallel_enabled() {
#ifdef REPRINGS_OPENMP
    return true;
#else
    return false;
#endif
}

// Index-parallel loop with deterministic aggregation: each iteration writes
// only to its own slot. The first exception (by index) is rethrown.
template <class F>
void parallel_for(int n, bool parallel, F&& f) {
    std::vector<std::exception_ptr> errs(static_cast<size_t>(n));
#ifdef REPRINGS_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            try {
                f(i);
            } catch (...) {
                errs[size_t(i)] = std::current_exception();
            }
        }
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
        return;
    }
#endif
    (void)parallel;
    for (int i = 0; i < n; ++i) f(i);
}

} // namespace reprings
