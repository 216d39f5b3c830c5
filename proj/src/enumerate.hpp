#pragma once

#include "graycat/core.hpp"
#include "graycat/functor.hpp"
#include "graycat/report.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graycat::detail {

// One component to choose during a brute-force search. `candidates` may read
// any slot assigned before this one.
struct Slot {
    int* target;
    int range;   // upper bound on the number of candidates
    bool forced; // at most one candidate
    std::function<std::vector<int>()> candidates;
};

// Largest number of dim-cells sharing one source and target; bounds the
// candidates of any boundary-forced slot.
inline int max_parallel(const FiniteGrayCategory& H, int dim)
{
    if (dim == 0)
        return H.count(0);
    int best = 0;
    for (int s = 0; s < H.count(dim - 1); ++s) {
        std::vector<int> per_tgt(H.count(dim - 1), 0);
        for (int j : H.with_src(dim, s))
            best = std::max(best, ++per_tgt[H.tgt(dim, j)]);
    }
    return best;
}

// Depth-first search over the slots in order; every leaf is a copy of
// `proto` and is kept when `valid` accepts it. Leaves are checked in
// parallel and returned in search order.
template <typename T, typename Valid>
std::vector<T> enumerate(std::vector<Slot>& slots, T& proto, const std::string& what, Valid&& valid)
{
    double log_size = 0;
    for (const auto& s : slots)
        if (!s.forced)
            log_size += std::log(static_cast<double>(std::max(1, s.range)));
    if (log_size > std::log(static_cast<double>(size_bound())) + 1e-9)
        throw SizeBoundError(what + ": search size exceeds the bound " + std::to_string(size_bound()));

    std::vector<T> leaves;
    std::function<void(std::size_t)> dfs = [&](std::size_t k) {
        if (k == slots.size()) {
            leaves.push_back(proto);
            return;
        }
        for (int v : slots[k].candidates()) {
            *slots[k].target = v;
            dfs(k + 1);
        }
        *slots[k].target = -1;
    };
    dfs(0);

    const long n = static_cast<long>(leaves.size());
    std::vector<char> keep(leaves.size(), 0);
#ifdef _OPENMP
    int nt = jobs() > 0 ? jobs() : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
#endif
    for (long i = 0; i < n; ++i)
        keep[i] = valid(leaves[i]) ? 1 : 0;

    std::vector<T> out;
    for (long i = 0; i < n; ++i)
        if (keep[i])
            out.push_back(std::move(leaves[i]));
    return out;
}

} // namespace graycat::detail
