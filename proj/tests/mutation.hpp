#pragma once

#include "graycat/functor.hpp"
#include "graycat/validate.hpp"

#include <string>
#include <vector>

namespace mutation {

using namespace graycat;

struct Mutant {
    std::string what;
    FiniteGrayCategory cat;
};

// Every category obtained by rebinding one table or identity entry of C to
// a different cell of the same dimension.
inline std::vector<Mutant> single_entry_mutants(const FiniteGrayCategory& C)
{
    std::vector<Mutant> out;
    for (Op op : all_ops()) {
        const OpShape& s = op_shape(op);
        for (const auto& e : C.table(op).entries())
            for (int c = 0; c < C.count(s.result); ++c) {
                if (c == e.c)
                    continue;
                Mutant m{std::string(s.name) + "(" + C.label(s.left, e.a) + ", " + C.label(s.right, e.b) + ") = " +
                             C.label(s.result, c),
                         C};
                m.cat.set(op, e.a, e.b, c);
                m.cat.finalize();
                out.push_back(std::move(m));
            }
    }
    for (int d = 0; d < 3; ++d)
        for (int i = 0; i < C.count(d); ++i) {
            const int e = C.identity_entry(d, i);
            for (int c = 0; c < C.count(d + 1); ++c) {
                if (c == e)
                    continue;
                Mutant m{"id(" + C.label(d, i) + ") = " + C.label(d + 1, c), C};
                m.cat.set_identity(d, i, c);
                m.cat.finalize();
                out.push_back(std::move(m));
            }
        }
    return out;
}

inline bool detected(const FiniteGrayCategory& M)
{
    try {
        check_structure(M);
        return !validate_gray_category(M, Exec::serial).ok();
    } catch (const std::exception&) {
        return true;
    }
}

inline bool bijective(const GrayFunctor& F)
{
    for (int d = 0; d < 4; ++d) {
        std::vector<char> hit(static_cast<std::size_t>(F.cod->count(d)));
        if (F.dom->count(d) != F.cod->count(d))
            return false;
        for (int v : F.map[d])
            if (hit[static_cast<std::size_t>(v)]++)
                return false;
    }
    return true;
}

// A surviving mutant is equivalent by symmetry when it is isomorphic to the
// original: a bijective strict functor exists in each direction.
inline bool isomorphic(const CatPtr& A, const CatPtr& B)
{
    auto any_bijective = [](const CatPtr& X, const CatPtr& Y) {
        for (const auto& F : enumerate_functors(X, Y))
            if (bijective(F))
                return true;
        return false;
    };
    return any_bijective(A, B) && any_bijective(B, A);
}

} // namespace mutation
