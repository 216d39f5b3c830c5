#pragma once

#include "graycat/report.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graycat::detail {

// Runs fn(i, report) for i in [0, n) and merges the per-thread reports.
// Violations are ordered by instance index, so the result does not depend
// on the schedule.
// Below this many instances a thread team costs more than it saves.
inline constexpr long kParallelMin = 256;

template <typename Fn>
ValidationReport run_instances(Exec ex, long n, Fn&& fn)
{
    auto tag = [](ValidationReport& r, std::size_t from, long i) {
        for (std::size_t k = from; k < r.violations.size(); ++k)
            r.violations[k].seq = static_cast<std::uint64_t>(i);
    };
    ValidationReport out;
#ifdef _OPENMP
    if (ex == Exec::parallel && n >= kParallelMin) {
        int nt = jobs() > 0 ? jobs() : omp_get_max_threads();
        std::vector<ValidationReport> parts(static_cast<std::size_t>(nt));
#pragma omp parallel num_threads(nt)
        {
            ValidationReport& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
            for (long i = 0; i < n; ++i) {
                std::size_t before = local.violations.size();
                fn(i, local);
                tag(local, before, i);
            }
        }
        for (auto& p : parts)
            out.merge(p);
        std::stable_sort(out.violations.begin(), out.violations.end(),
                         [](const Violation& a, const Violation& b) { return a.seq < b.seq; });
        return out;
    }
#endif
    (void)ex;
    for (long i = 0; i < n; ++i) {
        std::size_t before = out.violations.size();
        fn(i, out);
        tag(out, before, i);
    }
    return out;
}

} // namespace graycat::detail
