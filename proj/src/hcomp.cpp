#include "graycat/hcomp.hpp"

#include "axioms.hpp"
#include "check.hpp"
#include "compare.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graycat {

namespace {

void middle(const CatPtr& left_src, const CatPtr& right_tgt)
{
    if (left_src.get() != right_tgt.get())
        throw TypingError("*-1: middle categories differ");
}

int map_or_none(const std::vector<int>& m, int v) { return v < 0 ? -1 : m.at(v); }

} // namespace

CatPtr HCell::source_cat() const
{
    switch (rank()) {
    case 0: return std::get<0>(v).dom;
    case 1: return std::get<1>(v).dom.dom;
    case 2: return std::get<2>(v).dom.dom.dom;
    default: return std::get<3>(v).dom.dom.dom.dom;
    }
}

CatPtr HCell::target_cat() const
{
    switch (rank()) {
    case 0: return std::get<0>(v).cod;
    case 1: return std::get<1>(v).dom.cod;
    case 2: return std::get<2>(v).dom.dom.cod;
    default: return std::get<3>(v).dom.dom.dom.cod;
    }
}

HCell HCell::lower() const
{
    switch (rank()) {
    case 1: return {std::get<1>(v).dom};
    case 2: return {std::get<2>(v).dom};
    case 3: return {std::get<3>(v).dom};
    default: throw std::invalid_argument("a functor has no source cell");
    }
}

const char* kind_name(int rank)
{
    static const char* names[] = {"functor", "pstransf", "psmod", "perturbation"};
    return names[std::clamp(rank, 0, 3)];
}

ValidationReport validate(const HCell& x, Exec ex)
{
    switch (x.rank()) {
    case 0: return validate_functor(std::get<0>(x.v), ex);
    case 1: return validate_pstransf(std::get<1>(x.v), ex);
    case 2: return validate_psmod(std::get<2>(x.v), ex);
    default: return validate_perturbation(std::get<3>(x.v), ex);
    }
}

GrayFunctor hcomp(const GrayFunctor& H, const GrayFunctor& G)
{
    middle(H.dom, G.cod);
    return compose_functors(H, G);
}

PseudoTransformation hcomp(const GrayFunctor& H, const PseudoTransformation& a)
{
    middle(H.dom, a.dom.cod);
    PseudoTransformation t{compose_functors(H, a.dom), compose_functors(H, a.cod), {}, {}, {}, {}};
    for (int v : a.at0)
        t.at0.push_back(H.map[1].at(v));
    for (int v : a.at1)
        t.at1.push_back(H.map[2].at(v));
    for (int v : a.at2)
        t.at2.push_back(H.map[3].at(v));
    for (int v : a.coc)
        t.coc.push_back(map_or_none(H.map[3], v));
    return t;
}

PseudoModification hcomp(const GrayFunctor& H, const PseudoModification& A)
{
    PseudoModification m{hcomp(H, A.dom), hcomp(H, A.cod), {}, {}};
    for (int v : A.at0)
        m.at0.push_back(H.map[2].at(v));
    for (int v : A.at1)
        m.at1.push_back(H.map[3].at(v));
    return m;
}

Perturbation hcomp(const GrayFunctor& H, const Perturbation& P)
{
    Perturbation p{hcomp(H, P.dom), hcomp(H, P.cod), {}};
    for (int v : P.at0)
        p.at0.push_back(H.map[3].at(v));
    return p;
}

PseudoTransformation hcomp(const PseudoTransformation& b, const GrayFunctor& G)
{
    middle(b.dom.dom, G.cod);
    const auto& C = *G.dom;
    const int n1 = C.count(1);
    const int m1 = b.source().count(1);
    PseudoTransformation t{compose_functors(b.dom, G), compose_functors(b.cod, G), {}, {}, {},
                           std::vector<int>(static_cast<std::size_t>(n1) * n1, -1)};
    for (int x = 0; x < C.count(0); ++x)
        t.at0.push_back(b.at0[G.map[0][x]]);
    for (int f = 0; f < n1; ++f)
        t.at1.push_back(b.at1[G.map[1][f]]);
    for (int p = 0; p < C.count(2); ++p)
        t.at2.push_back(b.at2[G.map[2][p]]);
    for (const auto& e : C.table(Op::comp0).entries())
        t.coc[static_cast<std::size_t>(e.a) * n1 + e.b] =
            b.coc[static_cast<std::size_t>(G.map[1][e.a]) * m1 + G.map[1][e.b]];
    return t;
}

PseudoModification hcomp(const PseudoModification& B, const GrayFunctor& G)
{
    PseudoModification m{hcomp(B.dom, G), hcomp(B.cod, G), {}, {}};
    for (int x = 0; x < G.dom->count(0); ++x)
        m.at0.push_back(B.at0[G.map[0][x]]);
    for (int f = 0; f < G.dom->count(1); ++f)
        m.at1.push_back(B.at1[G.map[1][f]]);
    return m;
}

Perturbation hcomp(const Perturbation& D, const GrayFunctor& G)
{
    Perturbation p{hcomp(D.dom, G), hcomp(D.cod, G), {}};
    for (int x = 0; x < G.dom->count(0); ++x)
        p.at0.push_back(D.at0[G.map[0][x]]);
    return p;
}

PseudoTransformation lhc(const PseudoTransformation& b, const PseudoTransformation& a)
{
    middle(b.dom.dom, a.dom.cod);
    const auto& C = a.source();
    const auto& K = b.target();
    const int n1 = C.count(1);
    auto Hc = [&](int d, int i) { return b.dom({d, i}); };
    auto H2c = [&](int d, int i) { return b.cod({d, i}); };
    auto G = [&](int d, int i) { return a.dom.map[d][i]; };
    auto G2 = [&](int d, int i) { return a.cod.map[d][i]; };

    PseudoTransformation t{compose_functors(b.dom, a.dom), compose_functors(b.cod, a.cod), {}, {}, {},
                           std::vector<int>(static_cast<std::size_t>(n1) * n1, -1)};
    for (int x = 0; x < C.count(0); ++x)
        t.at0.push_back(K.h0(b.x(G2(0, x)), Hc(1, a.at0[x])).idx);
    for (int f = 0; f < n1; ++f) {
        const int x = C.src(1, f), y = C.tgt(1, f);
        t.at1.push_back(
            K.h1(K.h0(b.x(G2(0, y)), Hc(2, a.at1[f])), K.h0(b.f(G2(1, f)), Hc(1, a.at0[x]))).idx);
    }
    for (int p = 0; p < C.count(2); ++p) {
        const int f = C.src(2, p), f2 = C.tgt(2, p);
        const int x = C.src(1, f), y = C.tgt(1, f);
        Cell first = K.h1(K.h0(b.x(G2(0, y)), Hc(3, a.at2[p])), K.h0(b.f(G2(1, f)), Hc(1, a.at0[x])));
        Cell second = K.h1(K.h0(b.x(G2(0, y)), Hc(2, a.at1[f2])), K.h0(b.phi(G2(2, p)), Hc(1, a.at0[x])));
        t.at2.push_back(K.h2(second, first).idx);
    }
    for (const auto& e : C.table(Op::comp0).entries()) {
        const int f2 = e.a, f1 = e.b;
        const int x = C.src(1, f1), z = C.tgt(1, f2);
        Cell first = K.h1(K.h0(b.x(G2(0, z)), Hc(2, a.at1[f2]), Hc(1, G(1, f1))),
                          K.inv(K.tens(b.f(G2(1, f2)), Hc(2, a.at1[f1]))),
                          K.h0(H2c(1, G2(1, f2)), b.f(G2(1, f1)), Hc(1, a.at0[x])));
        Cell second = K.h1(K.h0(b.x(G2(0, z)), Hc(3, a.c(f2, f1).idx)),
                           K.h0(b.c(G2(1, f2), G2(1, f1)), Hc(1, a.at0[x])));
        t.coc[static_cast<std::size_t>(f2) * n1 + f1] = K.h2(second, first).idx;
    }
    return t;
}

PseudoTransformation rhc(const PseudoTransformation& b, const PseudoTransformation& a)
{
    middle(b.dom.dom, a.dom.cod);
    const auto& C = a.source();
    const auto& K = b.target();
    const int n1 = C.count(1);
    auto Hc = [&](int d, int i) { return b.dom({d, i}); };
    auto H2c = [&](int d, int i) { return b.cod({d, i}); };
    auto G = [&](int d, int i) { return a.dom.map[d][i]; };
    auto G2 = [&](int d, int i) { return a.cod.map[d][i]; };

    PseudoTransformation t{compose_functors(b.dom, a.dom), compose_functors(b.cod, a.cod), {}, {}, {},
                           std::vector<int>(static_cast<std::size_t>(n1) * n1, -1)};
    for (int x = 0; x < C.count(0); ++x)
        t.at0.push_back(K.h0(H2c(1, a.at0[x]), b.x(G(0, x))).idx);
    for (int f = 0; f < n1; ++f) {
        const int x = C.src(1, f), y = C.tgt(1, f);
        t.at1.push_back(
            K.h1(K.h0(H2c(1, a.at0[y]), b.f(G(1, f))), K.h0(H2c(2, a.at1[f]), b.x(G(0, x)))).idx);
    }
    for (int p = 0; p < C.count(2); ++p) {
        const int f = C.src(2, p), f2 = C.tgt(2, p);
        const int x = C.src(1, f), y = C.tgt(1, f);
        Cell first = K.h1(K.h0(H2c(1, a.at0[y]), b.phi(G(2, p))), K.h0(H2c(2, a.at1[f]), b.x(G(0, x))));
        Cell second = K.h1(K.h0(H2c(1, a.at0[y]), b.f(G(1, f2))), K.h0(H2c(3, a.at2[p]), b.x(G(0, x))));
        t.at2.push_back(K.h2(second, first).idx);
    }
    for (const auto& e : C.table(Op::comp0).entries()) {
        const int f2 = e.a, f1 = e.b;
        const int x = C.src(1, f1), z = C.tgt(1, f2);
        Cell first = K.h1(K.h0(H2c(1, a.at0[z]), b.f(G(1, f2)), Hc(1, G(1, f1))),
                          K.inv(K.tens(H2c(2, a.at1[f2]), b.f(G(1, f1)))),
                          K.h0(H2c(1, G2(1, f2)), H2c(2, a.at1[f1]), b.x(G(0, x))));
        Cell second = K.h1(K.h0(H2c(1, a.at0[z]), b.c(G(1, f2), G(1, f1))),
                           K.h0(H2c(3, a.c(f2, f1).idx), b.x(G(0, x))));
        t.coc[static_cast<std::size_t>(f2) * n1 + f1] = K.h2(second, first).idx;
    }
    return t;
}

PseudoModification hcomp(const PseudoTransformation& b, const PseudoTransformation& a)
{
    middle(b.dom.dom, a.dom.cod);
    const auto& C = a.source();
    const auto& K = b.target();
    PseudoModification m{rhc(b, a), lhc(b, a), {}, {}};
    for (int x = 0; x < C.count(0); ++x)
        m.at0.push_back(b.at1[a.at0[x]]);
    for (int f = 0; f < C.count(1); ++f) {
        const int x = C.src(1, f), y = C.tgt(1, f);
        const int Gf = a.dom.map[1][f], G2f = a.cod.map[1][f];
        const int ax = a.at0[x], ay = a.at0[y];
        Cell s1 = K.h1(K.h0(b.x(a.cod.map[0][y]), b.dom({2, a.at1[f]})), b.c(G2f, ax));
        Cell s2 = b.phi(a.at1[f]);
        Cell s3 = K.h1(K.inv(b.c(ay, Gf)), K.h0(b.cod({2, a.at1[f]}), b.x(a.dom.map[0][x])));
        m.at1.push_back(K.h2(s3, s2, s1).idx);
    }
    return m;
}

Perturbation hcomp(const PseudoTransformation& b, const PseudoModification& A)
{
    const auto& a = A.dom;
    const auto& a2 = A.cod;
    const GrayFunctor& H = b.dom;
    const GrayFunctor& H2 = b.cod;
    PseudoModification lower = comp1_psmod(whiskr_psmod(hcomp(b, a.cod), hcomp(H, A)), hcomp(b, a));
    PseudoModification upper = comp1_psmod(hcomp(b, a2), whiskl_psmod(hcomp(H2, A), hcomp(b, a.dom)));
    Perturbation p{std::move(lower), std::move(upper), {}};
    for (int v : A.at0)
        p.at0.push_back(b.at2[v]);
    return p;
}

Perturbation hcomp(const PseudoModification& B, const PseudoTransformation& a)
{
    const auto& b = B.dom;
    const auto& b2 = B.cod;
    const GrayFunctor& H = b.dom;
    const GrayFunctor& H2 = b.cod;
    PseudoModification lower = comp1_psmod(hcomp(b2, a), whiskr_psmod(hcomp(H2, a), hcomp(B, a.dom)));
    PseudoModification upper = comp1_psmod(whiskl_psmod(hcomp(B, a.cod), hcomp(H, a)), hcomp(b, a));
    Perturbation p{std::move(lower), std::move(upper), {}};
    for (int v : a.at0)
        p.at0.push_back(B.at1[v]);
    return p;
}

HCell hcomp(const HCell& l, const HCell& r)
{
    middle(l.source_cat(), r.target_cat());
    const int rl = l.rank(), rr = r.rank();
    if (rl + rr >= 4) {
        HCell a = l, b = r;
        while (a.rank() + b.rank() > 2) {
            if (a.rank() >= b.rank())
                a = a.lower();
            else
                b = b.lower();
        }
        return {id_pert(std::get<PseudoModification>(hcomp(a, b).v))};
    }
    switch (rl * 4 + rr) {
    case 0: return {hcomp(std::get<0>(l.v), std::get<0>(r.v))};
    case 1: return {hcomp(std::get<0>(l.v), std::get<1>(r.v))};
    case 2: return {hcomp(std::get<0>(l.v), std::get<2>(r.v))};
    case 3: return {hcomp(std::get<0>(l.v), std::get<3>(r.v))};
    case 4: return {hcomp(std::get<1>(l.v), std::get<0>(r.v))};
    case 5: return {hcomp(std::get<1>(l.v), std::get<1>(r.v))};
    case 6: return {hcomp(std::get<1>(l.v), std::get<2>(r.v))};
    case 8: return {hcomp(std::get<2>(l.v), std::get<0>(r.v))};
    case 9: return {hcomp(std::get<2>(l.v), std::get<1>(r.v))};
    case 12: return {hcomp(std::get<3>(l.v), std::get<0>(r.v))};
    }
    throw std::logic_error("hcomp: unreachable rank pair");
}

ValidationReport check_one_sided(const PseudoTransformation& b, const PseudoTransformation& a)
{
    ValidationReport r;
    detail::guarded(r, "lhc expansion", [&] {
        detail::compare(r, "lhc expansion", "lhc", lhc(b, a), comp0_pstransf(hcomp(b, a.cod), hcomp(b.dom, a)));
    });
    detail::guarded(r, "rhc expansion", [&] {
        detail::compare(r, "rhc expansion", "rhc", rhc(b, a), comp0_pstransf(hcomp(b.cod, a), hcomp(b, a.dom)));
    });
    return r;
}

ValidationReport check_hcomp_modification(const PseudoTransformation& b, const PseudoTransformation& a)
{
    ValidationReport r;
    detail::guarded(r, "hcomp modification", [&] { r.merge(validate_psmod(hcomp(b, a))); });
    return r;
}

ValidationReport check_pasteunit(const PseudoTransformation& b, const GrayFunctor& G)
{
    ValidationReport r;
    detail::guarded(r, "pasteunit", [&] {
        detail::compare(r, "pasteunit", "beta*id", hcomp(b, id_pstransf(G)), id_psmod(hcomp(b, G)));
    });
    return r;
}

ValidationReport check_interchange(const PseudoTransformation& b2, const PseudoTransformation& b1,
                                   const PseudoTransformation& a)
{
    ValidationReport r;
    detail::guarded(r, "interchange input", [&] {
        r.merge(validate_pstransf(b2), "input beta': ");
        r.merge(validate_pstransf(b1), "input beta: ");
        r.merge(validate_pstransf(a), "input alpha: ");
    });
    detail::guarded(r, "interchange", [&] {
        PseudoModification lhs = comp1_psmod(whiskr_psmod(hcomp(b2, a.cod), hcomp(b1, a)),
                                             whiskl_psmod(hcomp(b2, a), hcomp(b1, a.dom)));
        PseudoModification rhs = hcomp(comp0_pstransf(b2, b1), a);
        detail::compare(r, "interchange", "lhs", lhs, rhs);
    });
    return r;
}

ValidationReport check_hcomp_perturbations(const HCell& x, const HCell& y)
{
    if (x.rank() + y.rank() != 3)
        throw std::invalid_argument("check_hcomp_perturbations: ranks must add up to 3");
    ValidationReport r;
    detail::guarded(r, "hcomp perturbation input", [&] {
        r.merge(validate(x), "input left: ");
        r.merge(validate(y), "input right: ");
    });
    detail::guarded(r, "hcomp perturbation", [&] {
        HCell z = hcomp(x, y);
        r.merge(validate_perturbation(std::get<Perturbation>(z.v)));
    });
    return r;
}

ValidationReport check_hcomp_typing(const HCell& x, const HCell& y)
{
    ValidationReport r;
    const int want = std::min(3, x.rank() + y.rank());
    detail::guarded(r, "hcomp typing", [&] {
        HCell z = hcomp(x, y);
        ++r.instances["hcomp rank"];
        if (z.rank() != want)
            r.add("hcomp rank", {kind_name(x.rank()), kind_name(y.rank())}, kind_name(want), kind_name(z.rank()));
        r.merge(validate(z), std::string("hcomp ") + kind_name(x.rank()) + "*" + kind_name(y.rank()) + " result: ");
    });
    return r;
}

ValidationReport check_pair_entry(const HCell& x, const HCell& y, PairEntry choice)
{
    const int key = x.rank() * 4 + y.rank();
    if (key != 2 && key != 8)
        throw std::invalid_argument("check_pair_entry: needs a functor with a modification");
    ValidationReport r;
    const char* axiom = choice == PairEntry::printed ? "pair entry (printed)" : "pair entry (composite)";
    detail::guarded(r, axiom, [&] {
        PseudoModification M = std::get<PseudoModification>(hcomp(x, y).v);
        const auto& C = M.source();
        const auto& K = M.target();
        for (const auto& e : C.table(Op::comp0).entries()) {
            Cell slot = choice == PairEntry::printed ? M.f(e.b) : M.f(e.c);
            detail::expect_equal(
                r, axiom, K, [&] { return std::vector<std::string>{C.label(1, e.a), C.label(1, e.b)}; },
                [&] { return detail::psmod_cocycle_sides(M, e.a, e.b, slot); });
        }
    });
    return r;
}

ValidationReport resolve_pair_entries(const HCell& x, const HCell& y)
{
    ValidationReport printed = check_pair_entry(x, y, PairEntry::printed);
    ValidationReport composite = check_pair_entry(x, y, PairEntry::composite);
    const std::string what = x.rank() == 0 ? "H*A" : "B*G";
    auto verdict = [](const ValidationReport& r) {
        std::ostringstream os;
        if (r.ok())
            os << "passes";
        else
            os << "fails (" << r.violations.size() << " violations)";
        return os.str();
    };
    ValidationReport out = composite;
    out.notes.push_back(what + " pair entry: printed candidate " + verdict(printed) + ", composite candidate " +
                        verdict(composite));
    ++out.instances["pair entry (printed)"];
    if (!printed.ok())
        out.notes.push_back(what + " pair entry: printed candidate witness " +
                            (printed.violations[0].witness.empty() ? std::string("-")
                                                                    : printed.violations[0].witness[0] + "," +
                                                                          printed.violations[0].witness.back()));
    return out;
}

} // namespace graycat
