#pragma once

#include "graycat/transfor.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace coverage {

using namespace graycat;

// Axiom counters for the transfor validators. `instances` counts evaluated
// instances on valid families; `rejections` counts boundary-correct
// candidates that the axiom rejects, which is the witness that the axiom is
// not vacuous on the fixtures.
struct Counters {
    std::map<std::string, std::size_t> instances;
    std::map<std::string, std::size_t> rejections;
    std::size_t members = 0;
    std::size_t invalid_members = 0;
    std::size_t candidates = 0;
};

inline const std::vector<std::string>& equation_axioms()
{
    static const std::vector<std::string> names = {
        "pstransf identity 1-cell",   "pstransf 3-cell naturality", "pstransf 2-cell composition",
        "pstransf 2-cell identity",   "pstransf cocycle",           "pstransf cocycle normalization",
        "pstransf left whiskering",   "pstransf right whiskering",  "psmod unit",
        "psmod cocycle compatibility", "psmod 2-cell compatibility", "perturbation square",
    };
    return names;
}

// Other cells of H parallel to the d-cell c.
inline std::vector<int> parallel_cells(const FiniteGrayCategory& H, int d, int c)
{
    std::vector<int> out;
    for (int i = 0; i < H.count(d); ++i)
        if (i != c && (d == 0 || (H.src(d, i) == H.src(d, c) && H.tgt(d, i) == H.tgt(d, c))))
            out.push_back(i);
    return out;
}

inline void reject(Counters& k, const ValidationReport& r)
{
    std::set<std::string> hit;
    for (const auto& viol : r.violations) {
        if (viol.structural)
            return;
        hit.insert(viol.axiom);
    }
    for (const auto& a : hit)
        ++k.rejections[a];
}

inline std::vector<int> with_boundary(const FiniteGrayCategory& H, int d, std::pair<Cell, Cell> b)
{
    std::vector<int> out;
    for (int i = 0; i < H.count(d); ++i)
        if (H.src(d, i) == b.first.idx && H.tgt(d, i) == b.second.idx)
            out.push_back(i);
    return out;
}

// Every assignment of components F => G whose boundaries are correct, each
// component chosen after the ones its boundary depends on.
inline void transformation_candidates(Counters& k, const GrayFunctor& F, const GrayFunctor& G)
{
    const auto& C = *F.dom;
    const auto& H = *F.cod;
    const int n1 = C.count(1);
    PseudoTransformation a{F, G, std::vector<int>(C.count(0), -1), std::vector<int>(n1, -1),
                           std::vector<int>(C.count(2), -1), std::vector<int>(n1 * n1, -1)};
    struct Slot {
        std::vector<int> PseudoTransformation::*member;
        int index, f2, f1;
    };
    std::vector<Slot> slots;
    for (int x = 0; x < C.count(0); ++x)
        slots.push_back({&PseudoTransformation::at0, x, 0, 0});
    for (int f = 0; f < n1; ++f)
        slots.push_back({&PseudoTransformation::at1, f, 0, 0});
    for (int p = 0; p < C.count(2); ++p)
        slots.push_back({&PseudoTransformation::at2, p, 0, 0});
    for (const auto& e : C.table(Op::comp0).entries())
        slots.push_back({&PseudoTransformation::coc, e.a * n1 + e.b, e.a, e.b});
    auto choices = [&](const Slot& s) -> std::vector<int> {
        try {
            if (s.member == &PseudoTransformation::at0) {
                std::vector<int> out;
                for (int i = 0; i < H.count(1); ++i)
                    if (H.src(1, i) == F.map[0][s.index] && H.tgt(1, i) == G.map[0][s.index])
                        out.push_back(i);
                return out;
            }
            if (s.member == &PseudoTransformation::at1)
                return with_boundary(H, 2, at1_boundary(a, s.index));
            if (s.member == &PseudoTransformation::at2)
                return with_boundary(H, 3, at2_boundary(a, s.index));
            return with_boundary(H, 3, coc_boundary(a, s.f2, s.f1));
        } catch (const std::exception&) {
            return {};
        }
    };
    auto fill = [&](auto&& self, std::size_t i) -> void {
        if (i == slots.size()) {
            ++k.candidates;
            reject(k, validate_pstransf(a, Exec::serial));
            return;
        }
        const Slot& s = slots[i];
        for (int c : choices(s)) {
            (a.*s.member)[s.index] = c;
            self(self, i + 1);
        }
        (a.*s.member)[s.index] = -1;
    };
    fill(fill, 0);
}

template <typename T, typename Validate>
void record(Counters& k, const T& value, Validate&& validate, std::vector<std::pair<std::vector<int> T::*, int>> parts)
{
    auto r = validate(value);
    ++k.members;
    if (!r.ok())
        ++k.invalid_members;
    for (const auto& [name, n] : r.instances)
        k.instances[name] += n;
    const auto& H = value.target();
    for (const auto& [member, dim] : parts) {
        const auto& v = value.*member;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0)
                continue;
            for (int alt : parallel_cells(H, dim, v[i])) {
                T m = value;
                (m.*member)[i] = alt;
                reject(k, validate(m));
            }
        }
    }
}

// Every family enumerated over the given (G, H) pairs, each member validated.
// Transformation axioms are exercised on all boundary-correct candidates,
// modification and perturbation axioms on every member with one component
// replaced by a parallel alternative.
inline Counters collect(const std::vector<std::pair<CatPtr, CatPtr>>& pairs, Exec ex = Exec::parallel)
{
    Counters k;
    auto vt = [ex](const PseudoTransformation& a) { return validate_pstransf(a, ex); };
    auto vm = [ex](const PseudoModification& A) { return validate_psmod(A, ex); };
    auto vp = [ex](const Perturbation& P) { return validate_perturbation(P, ex); };
    for (const auto& [G, H] : pairs) {
        auto fs = enumerate_functors(G, H);
        std::vector<PseudoTransformation> ts;
        for (const auto& F : fs)
            for (const auto& F2 : fs)
                for (auto& t : enumerate_pstransf(F, F2))
                    ts.push_back(std::move(t));
        for (const auto& a : ts)
            record(k, a, vt, {});
        for (const auto& F : fs)
            for (const auto& F2 : fs)
                transformation_candidates(k, F, F2);
        for (const auto& a : ts)
            for (const auto& b : ts) {
                if (!(a.dom == b.dom && a.cod == b.cod))
                    continue;
                auto ms = enumerate_psmod(a, b);
                for (const auto& A : ms)
                    record(k, A, vm, {{&PseudoModification::at0, 2}, {&PseudoModification::at1, 3}});
                for (const auto& A : ms)
                    for (const auto& B : ms)
                        for (const auto& P : enumerate_pert(A, B))
                            record(k, P, vp, {{&Perturbation::at0, 3}});
            }
    }
    return k;
}

} // namespace coverage
