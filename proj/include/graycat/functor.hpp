#pragma once

#include "graycat/core.hpp"
#include "graycat/report.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace graycat {

struct GrayFunctor {
    CatPtr dom, cod;
    std::array<std::vector<int>, 4> map;

    Cell operator()(Cell c) const { return {c.dim, map[c.dim].at(c.idx)}; }
    bool operator==(const GrayFunctor& o) const
    {
        return dom.get() == o.dom.get() && cod.get() == o.cod.get() && map == o.map;
    }
};

// Default search-size bound for the brute-force enumerators; GRAYCAT_SIZE_BOUND overrides it.
std::uint64_t size_bound();
void set_size_bound(std::uint64_t b);

ValidationReport validate_functor(const GrayFunctor& F, Exec ex = Exec::parallel);
GrayFunctor compose_functors(const GrayFunctor& G, const GrayFunctor& F);
GrayFunctor identity_functor(const CatPtr& C);
// All strict Gray-functors G -> H, in lexicographic order of cell assignments.
std::vector<GrayFunctor> enumerate_functors(const CatPtr& G, const CatPtr& H);

} // namespace graycat
