#include "graycat/hom.hpp"

namespace graycat {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw TypingError(what);
}

} // namespace

PseudoTransformation comp0_pstransf(const PseudoTransformation& b2, const PseudoTransformation& b1)
{
    require(b1.cod == b2.dom, "comp0_pstransf: codomain of the first is not the domain of the second");
    const auto& C = b1.source();
    const auto& H = b1.target();
    const int n1 = C.count(1);
    PseudoTransformation t{b1.dom, b2.cod, {}, {}, {}, std::vector<int>(static_cast<std::size_t>(n1) * n1, -1)};
    for (int x = 0; x < C.count(0); ++x)
        t.at0.push_back(H.h0(b2.x(x), b1.x(x)).idx);
    for (int f = 0; f < n1; ++f) {
        const int x = C.src(1, f), y = C.tgt(1, f);
        t.at1.push_back(H.h1(H.h0(b2.x(y), b1.f(f)), H.h0(b2.f(f), b1.x(x))).idx);
    }
    for (int p = 0; p < C.count(2); ++p) {
        const int f = C.src(2, p), f2 = C.tgt(2, p);
        const int x = C.src(1, f), y = C.tgt(1, f);
        Cell first = H.h1(H.h0(b2.x(y), b1.phi(p)), H.h0(b2.f(f), b1.x(x)));
        Cell second = H.h1(H.h0(b2.x(y), b1.f(f2)), H.h0(b2.phi(p), b1.x(x)));
        t.at2.push_back(H.h2(second, first).idx);
    }
    for (const auto& e : C.table(Op::comp0).entries()) {
        const int f2 = e.a, f1 = e.b;
        const int x = C.src(1, f1), z = C.tgt(1, f2);
        Cell Gf1 = b1.dom({1, f1});
        Cell G2f2 = b2.cod({1, f2});
        Cell first = H.h1(H.h0(b2.x(z), b1.f(f2), Gf1), H.inv(H.tens(b2.f(f2), b1.f(f1))),
                          H.h0(G2f2, b2.f(f1), b1.x(x)));
        Cell second = H.h1(H.h0(b2.x(z), b1.c(f2, f1)), H.h0(b2.c(f2, f1), b1.x(x)));
        t.coc[static_cast<std::size_t>(f2) * n1 + f1] = H.h2(second, first).idx;
    }
    return t;
}

PseudoModification comp1_psmod(const PseudoModification& A2, const PseudoModification& A1)
{
    require(A1.cod == A2.dom, "comp1_psmod: codomain of the first is not the domain of the second");
    const auto& C = A1.source();
    const auto& H = A1.target();
    PseudoModification m{A1.dom, A2.cod, {}, {}};
    for (int x = 0; x < C.count(0); ++x)
        m.at0.push_back(H.h1(A2.x(x), A1.x(x)).idx);
    for (int f = 0; f < C.count(1); ++f) {
        const int x = C.src(1, f), y = C.tgt(1, f);
        Cell Ff = A1.dom.dom({1, f}), Gf = A1.dom.cod({1, f});
        Cell first = H.h1(A2.f(f), H.h0(Gf, A1.x(x)));
        Cell second = H.h1(H.h0(A2.x(y), Ff), A1.f(f));
        m.at1.push_back(H.h2(second, first).idx);
    }
    return m;
}

PseudoModification whiskr_psmod(const PseudoTransformation& beta, const PseudoModification& A)
{
    require(A.dom.cod == beta.dom, "whiskr_psmod: transformation does not start at the modification's codomain functor");
    const auto& a = A.dom;
    const auto& a2 = A.cod;
    const auto& C = A.source();
    const auto& H = A.target();
    PseudoModification m{comp0_pstransf(beta, a), comp0_pstransf(beta, a2), {}, {}};
    for (int x = 0; x < C.count(0); ++x)
        m.at0.push_back(H.h0(beta.x(x), A.x(x)).idx);
    for (int f = 0; f < C.count(1); ++f) {
        const int x = C.src(1, f), y = C.tgt(1, f);
        Cell first = H.h1(H.h0(beta.x(y), a2.f(f)), H.inv(H.tens(beta.f(f), A.x(x))));
        Cell second = H.h1(H.h0(beta.x(y), A.f(f)), H.h0(beta.f(f), a.x(x)));
        m.at1.push_back(H.h2(second, first).idx);
    }
    return m;
}

PseudoModification whiskl_psmod(const PseudoModification& B, const PseudoTransformation& alpha)
{
    require(B.dom.dom == alpha.cod, "whiskl_psmod: transformation does not end at the modification's domain functor");
    const auto& b = B.dom;
    const auto& b2 = B.cod;
    const auto& C = alpha.source();
    const auto& H = alpha.target();
    PseudoModification m{comp0_pstransf(b, alpha), comp0_pstransf(b2, alpha), {}, {}};
    for (int x = 0; x < C.count(0); ++x)
        m.at0.push_back(H.h0(B.x(x), alpha.x(x)).idx);
    for (int f = 0; f < C.count(1); ++f) {
        const int x = C.src(1, f), y = C.tgt(1, f);
        Cell first = H.h1(H.h0(b2.x(y), alpha.f(f)), H.h0(B.f(f), alpha.x(x)));
        Cell second = H.h1(H.tens(B.x(y), alpha.f(f)), H.h0(b.f(f), alpha.x(x)));
        m.at1.push_back(H.h2(second, first).idx);
    }
    return m;
}

namespace {

template <typename Fn>
Perturbation componentwise(PseudoModification dom, PseudoModification cod, const FiniteGrayCategory& C, Fn&& fn)
{
    Perturbation p{std::move(dom), std::move(cod), {}};
    for (int x = 0; x < C.count(0); ++x)
        p.at0.push_back(fn(x).idx);
    return p;
}

} // namespace

Perturbation comp2_pert(const Perturbation& D2, const Perturbation& D1)
{
    require(D1.cod == D2.dom, "comp2_pert: codomain of the first is not the domain of the second");
    const auto& H = D1.target();
    return componentwise(D1.dom, D2.cod, D1.source(), [&](int x) { return H.h2(D2.x(x), D1.x(x)); });
}

Perturbation whisk_pert(const PseudoTransformation& beta, const Perturbation& G)
{
    const auto& H = G.target();
    return componentwise(whiskr_psmod(beta, G.dom), whiskr_psmod(beta, G.cod), G.source(),
                         [&](int x) { return H.h0(beta.x(x), G.x(x)); });
}

Perturbation whisk_pert(const Perturbation& G, const PseudoTransformation& alpha)
{
    const auto& H = G.target();
    return componentwise(whiskl_psmod(G.dom, alpha), whiskl_psmod(G.cod, alpha), G.source(),
                         [&](int x) { return H.h0(G.x(x), alpha.x(x)); });
}

Perturbation whisk_pert(const PseudoModification& A, const Perturbation& G)
{
    const auto& H = G.target();
    return componentwise(comp1_psmod(A, G.dom), comp1_psmod(A, G.cod), G.source(),
                         [&](int x) { return H.h1(A.x(x), G.x(x)); });
}

Perturbation whisk_pert(const Perturbation& G, const PseudoModification& A)
{
    const auto& H = G.target();
    return componentwise(comp1_psmod(G.dom, A), comp1_psmod(G.cod, A), G.source(),
                         [&](int x) { return H.h1(G.x(x), A.x(x)); });
}

} // namespace graycat
