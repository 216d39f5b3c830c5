#pragma once

#include "graycat/core.hpp"
#include "graycat/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace graycat::detail {

// Evaluates both sides of one axiom instance in C and records a violation
// when they differ. Typing and closure failures during evaluation count as
// violations of the same instance; `structural` marks them as such.
template <typename Witness, typename Eval>
void expect_equal(ValidationReport& r, const char* axiom, const FiniteGrayCategory& C, Witness&& witness,
                  Eval&& eval, bool typing_is_structural = false)
{
    ++r.instances[axiom];
    try {
        auto [lhs, rhs] = eval();
        if (lhs != rhs)
            r.add(axiom, witness(), C.describe(lhs), C.describe(rhs));
    } catch (const TypingError& e) {
        r.add(axiom, witness(), "well-typed pasting", e.what(), typing_is_structural);
    } catch (const ClosureError& e) {
        r.add(axiom, witness(), "defined composite", e.what(), typing_is_structural);
    }
}

inline std::vector<std::string> labels(const FiniteGrayCategory& C, std::initializer_list<Cell> cells)
{
    std::vector<std::string> out;
    for (Cell c : cells)
        out.push_back(C.label(c));
    return out;
}

} // namespace graycat::detail
