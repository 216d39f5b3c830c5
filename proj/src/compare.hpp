#pragma once

#include "graycat/transfor.hpp"

#include <string>
#include <vector>

namespace graycat::detail {

// Componentwise equality of two values, one violation per differing component.
inline void compare_vec(ValidationReport& r, const std::string& axiom, const std::string& part,
                 const std::vector<int>& lhs, const std::vector<int>& rhs, const FiniteGrayCategory& K, int dim)
{
    ++r.instances[axiom];
    if (lhs.size() != rhs.size()) {
        r.add(axiom, {part}, std::to_string(rhs.size()) + " components", std::to_string(lhs.size()), true);
        return;
    }
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] != rhs[i]) {
            auto show = [&](int v) { return v < 0 ? std::string("none") : K.describe({dim, v}); };
            r.add(axiom, {part + "[" + std::to_string(i) + "]"}, show(rhs[i]), show(lhs[i]));
        }
}

inline void compare(ValidationReport& r, const std::string& axiom, const std::string& part, const GrayFunctor& l,
             const GrayFunctor& rr)
{
    ++r.instances[axiom];
    if (!(l == rr))
        r.add(axiom, {part}, "equal functors", "different functors");
}

inline void compare(ValidationReport& r, const std::string& axiom, const std::string& part,
             const PseudoTransformation& l, const PseudoTransformation& rr)
{
    const auto& K = l.target();
    compare(r, axiom, part + ".dom", l.dom, rr.dom);
    compare(r, axiom, part + ".cod", l.cod, rr.cod);
    compare_vec(r, axiom, part + ".at0", l.at0, rr.at0, K, 1);
    compare_vec(r, axiom, part + ".at1", l.at1, rr.at1, K, 2);
    compare_vec(r, axiom, part + ".at2", l.at2, rr.at2, K, 3);
    compare_vec(r, axiom, part + ".coc", l.coc, rr.coc, K, 3);
}

inline void compare(ValidationReport& r, const std::string& axiom, const std::string& part, const PseudoModification& l,
             const PseudoModification& rr)
{
    const auto& K = l.target();
    compare(r, axiom, part + ".dom", l.dom, rr.dom);
    compare(r, axiom, part + ".cod", l.cod, rr.cod);
    compare_vec(r, axiom, part + ".at0", l.at0, rr.at0, K, 2);
    compare_vec(r, axiom, part + ".at1", l.at1, rr.at1, K, 3);
}

// Runs fn, turning typing and closure failures into structural violations.
template <typename Fn>
void guarded(ValidationReport& r, const std::string& axiom, Fn&& fn)
{
    try {
        fn();
    } catch (const TypingError& e) {
        r.add(axiom, {}, "well-typed composite", e.what(), true);
    } catch (const ClosureError& e) {
        r.add(axiom, {}, "defined composite", e.what(), true);
    } catch (const StructuralError& e) {
        r.add(axiom, {}, "well-formed composite", e.what(), true);
    }
}

} // namespace graycat::detail
