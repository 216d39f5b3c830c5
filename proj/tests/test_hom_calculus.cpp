#include "graycat/hom.hpp"
#include "graycat/mapping_space.hpp"
#include "support.hpp"

using namespace graycat;
using support::cell;
using support::fx;

namespace {

PseudoTransformation bc_transf(int u1)
{
    const auto& C = *fx().bc;
    GrayFunctor I = identity_functor(fx().bc);
    return {I, I, {0}, {cell(C, 2, "0").idx}, {cell(C, 3, "(0,0)").idx, cell(C, 3, "(1," + std::to_string(u1) + ")").idx},
            {cell(C, 3, "(0,0)").idx}};
}

const MappingSpace& space(const CatPtr& G, const CatPtr& H)
{
    static std::map<std::pair<const void*, const void*>, MappingSpace> cache;
    auto key = std::pair<const void*, const void*>{G.get(), H.get()};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_mapping_space(G, H)).first;
    return it->second;
}

template <typename T>
bool contains(const std::vector<T>& v, const T& x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

} // namespace

TEST_SUITE("hom_calculus")
{
    TEST_CASE("BC composite of homomorphism transformations adds the homomorphisms")
    {
        CHECK(comp0_pstransf(bc_transf(1), bc_transf(1)) == bc_transf(0));
        CHECK(comp0_pstransf(bc_transf(0), bc_transf(1)) == bc_transf(1));
        CHECK(comp0_pstransf(bc_transf(1), bc_transf(0)) == bc_transf(1));
        auto I = identity_functor(fx().bc);
        CHECK(contains(enumerate_pstransf(I, I), comp0_pstransf(bc_transf(1), bc_transf(1))));
    }

    TEST_CASE("composite with a mismatched domain is a typing error")
    {
        const auto& M = space(fx().bc, fx().bc);
        for (const auto& b2 : M.transfs)
            for (const auto& b1 : M.transfs)
                if (!(b1.cod == b2.dom))
                    CHECK_THROWS_AS(comp0_pstransf(b2, b1), TypingError);
    }

    TEST_CASE("unit laws")
    {
        for (const auto* M : {&space(fx().bc, fx().bc), &space(fx().w1, fx().bc), &space(fx().one, fx().bc)}) {
            for (const auto& b : M->transfs) {
                CHECK(comp0_pstransf(id_pstransf(b.cod), b) == b);
                CHECK(comp0_pstransf(b, id_pstransf(b.dom)) == b);
            }
            for (const auto& A : M->mods) {
                CHECK(comp1_psmod(id_psmod(A.cod), A) == A);
                CHECK(comp1_psmod(A, id_psmod(A.dom)) == A);
                CHECK(whiskr_psmod(id_pstransf(A.dom.cod), A) == A);
                CHECK(whiskl_psmod(A, id_pstransf(A.dom.dom)) == A);
            }
            for (const auto& b : M->transfs)
                for (const auto& a : M->transfs)
                    if (a.cod == b.dom) {
                        CHECK(whiskr_psmod(b, id_psmod(a)) == id_psmod(comp0_pstransf(b, a)));
                        CHECK(whiskl_psmod(id_psmod(b), a) == id_psmod(comp0_pstransf(b, a)));
                    }
            for (const auto& P : M->perts) {
                CHECK(comp2_pert(id_pert(P.cod), P) == P);
                CHECK(comp2_pert(P, id_pert(P.dom)) == P);
                CHECK(whisk_pert(id_pstransf(P.dom.dom.cod), P) == P);
                CHECK(whisk_pert(P, id_pstransf(P.dom.dom.dom)) == P);
            }
        }
    }

    TEST_CASE("outputs are cells found by the enumerators")
    {
        const auto& M = space(fx().w1, fx().bc);
        for (const auto& A2 : M.mods)
            for (const auto& A1 : M.mods)
                if (A1.cod == A2.dom)
                    CHECK(contains(enumerate_psmod(A1.dom, A2.cod), comp1_psmod(A2, A1)));
        for (const auto& b : M.transfs)
            for (const auto& A : M.mods)
                if (b.dom == A.dom.cod) {
                    auto W = whiskr_psmod(b, A);
                    CHECK(contains(enumerate_psmod(W.dom, W.cod), W));
                }
        for (const auto& B : M.mods)
            for (const auto& a : M.transfs)
                if (a.cod == B.dom.dom) {
                    auto W = whiskl_psmod(B, a);
                    CHECK(contains(enumerate_psmod(W.dom, W.cod), W));
                }
        for (const auto& P2 : M.perts)
            for (const auto& P1 : M.perts)
                if (P1.cod == P2.dom)
                    CHECK(contains(enumerate_pert(P1.dom, P2.cod), comp2_pert(P2, P1)));
    }

    TEST_CASE("composite cocycle is the one the other components admit")
    {
        for (const auto* M : {&space(fx().bc, fx().bc), &space(fx().w1, fx().bc), &space(fx().one, fx().bc)})
            for (const auto& b2 : M->transfs)
                for (const auto& b1 : M->transfs)
                    if (b1.cod == b2.dom) {
                        auto c = comp0_pstransf(b2, b1);
                        int matches = 0;
                        for (const auto& t : enumerate_pstransf(c.dom, c.cod))
                            if (t.at0 == c.at0 && t.at1 == c.at1 && t.at2 == c.at2) {
                                ++matches;
                                CHECK(t.coc == c.coc);
                            }
                        CHECK(matches == 1);
                    }
    }

    TEST_CASE("associativity")
    {
        const auto& M = space(fx().w1, fx().bc);
        for (const auto& c : M.transfs)
            for (const auto& b : M.transfs)
                for (const auto& a : M.transfs)
                    if (a.cod == b.dom && b.cod == c.dom)
                        CHECK(comp0_pstransf(c, comp0_pstransf(b, a)) == comp0_pstransf(comp0_pstransf(c, b), a));
        for (const auto& C : M.mods)
            for (const auto& B : M.mods)
                for (const auto& A : M.mods)
                    if (A.cod == B.dom && B.cod == C.dom)
                        CHECK(comp1_psmod(C, comp1_psmod(B, A)) == comp1_psmod(comp1_psmod(C, B), A));
    }

    TEST_CASE("perturbation whiskers by modifications")
    {
        const auto& M = space(fx().w1, fx().bc);
        for (const auto& A : M.mods)
            for (const auto& P : M.perts) {
                if (P.cod.cod == A.dom) {
                    auto W = whisk_pert(A, P);
                    CHECK(validate_perturbation(W).ok());
                    CHECK(whisk_pert(id_psmod(A.dom), P) == P);
                }
                if (A.cod == P.dom.dom)
                    CHECK(validate_perturbation(whisk_pert(P, A)).ok());
            }
    }
}
