#include "graycat/hcomp.hpp"
#include "graycat/sweep.hpp"
#include "support.hpp"

using namespace graycat;
using support::cell;
using support::fx;

namespace {

const MappingSpace& space(const CatPtr& G, const CatPtr& H)
{
    static std::map<std::pair<const void*, const void*>, MappingSpace> cache;
    auto key = std::pair<const void*, const void*>{G.get(), H.get()};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_mapping_space(G, H)).first;
    return it->second;
}

// The nontrivial BC endo-transformation of the identity with one at2 entry
// moved off the identity.
PseudoTransformation corrupted_beta()
{
    const auto& Z = space(fx().bc, fx().bc);
    auto I = identity_functor(fx().bc);
    for (const auto& b : Z.transfs)
        if (b.dom == I && b.cod == I && !(b == id_pstransf(I))) {
            PseudoTransformation bad = b;
            bad.at2[0] = cell(*fx().bc, 3, "(0,1)").idx;
            return bad;
        }
    FAIL("no nontrivial endo-transformation");
    return {};
}

} // namespace

TEST_SUITE("hcomp")
{
    TEST_CASE("functor composite")
    {
        for (const auto& G : enumerate_functors(fx().w1, fx().bc))
            for (const auto& H : enumerate_functors(fx().bc, fx().bc)) {
                auto HG = hcomp(H, G);
                CHECK(HG == compose_functors(H, G));
                for (int x = 0; x < fx().w1->count(0); ++x)
                    CHECK(HG.map[0][x] == H.map[0][G.map[0][x]]);
            }
    }

    TEST_CASE("beta with a functor takes components at G")
    {
        const auto& Z = space(fx().bc, fx().bc);
        for (const auto& b : Z.transfs)
            for (const auto& G : enumerate_functors(fx().w1, fx().bc)) {
                auto bG = hcomp(b, G);
                for (int x = 0; x < fx().w1->count(0); ++x)
                    CHECK(bG.at0[x] == b.at0[G.map[0][x]]);
                for (int f = 0; f < fx().w1->count(1); ++f)
                    CHECK(bG.at1[f] == b.at1[G.map[1][f]]);
            }
    }

    TEST_CASE("beta with alpha on BC has identity components at the unit 1-cell")
    {
        const auto& Z = space(fx().bc, fx().bc);
        for (const auto& b : Z.transfs)
            for (const auto& a : Z.transfs) {
                if (!(a.cod.cod.get() == b.dom.dom.get()))
                    continue;
                auto M = hcomp(b, a);
                CHECK(fx().bc->is_identity(3, M.at1[0]));
            }
    }

    TEST_CASE("one-sided composites")
    {
        const auto& X = space(fx().w1, fx().bc);
        const auto& Z = space(fx().bc, fx().bc);
        for (const auto& b : Z.transfs)
            for (const auto& a : X.transfs) {
                CHECK(check_one_sided(b, a).ok());
                if (a == id_pstransf(a.dom)) {
                    CHECK(lhc(b, a) == hcomp(b, a.dom));
                    CHECK(rhc(b, a) == hcomp(b, a.dom));
                }
                if (b == id_pstransf(b.dom)) {
                    CHECK(lhc(b, a) == hcomp(b.dom, a));
                    CHECK(rhc(b, a) == hcomp(b.dom, a));
                }
            }
    }

    TEST_CASE("beta with alpha is a modification")
    {
        const auto& X = space(fx().w1, fx().bc);
        const auto& Z = space(fx().bc, fx().bc);
        for (const auto& b : Z.transfs)
            for (const auto& a : X.transfs)
                CHECK(check_hcomp_modification(b, a).ok());
        auto bad = corrupted_beta();
        bool caught = false;
        for (const auto& a : X.transfs)
            caught |= !check_hcomp_modification(bad, a).ok();
        CHECK(caught);
    }

    TEST_CASE("pasteunit")
    {
        const auto& Z = space(fx().bc, fx().bc);
        for (const auto& b : Z.transfs) {
            CHECK(check_pasteunit(b, identity_functor(fx().one)).ok() == false);
            for (const auto& G : enumerate_functors(fx().w1, fx().bc))
                CHECK(check_pasteunit(b, G).ok());
        }
        CHECK(sweep_pasteunit(space(fx().one, fx().bc), Z).ok());
        CHECK(sweep_pasteunit(space(fx().w1, fx().bc), Z).ok());
        CHECK(sweep_pasteunit(space(fx().bc, fx().bc), Z).ok());
    }

    TEST_CASE("interchange")
    {
        const auto& X = space(fx().w1, fx().bc);
        const auto& Z = space(fx().bc, fx().bc);
        for (const auto& b : Z.transfs)
            for (const auto& a : X.transfs) {
                CHECK(check_interchange(id_pstransf(b.cod), b, a).ok());
                CHECK(check_interchange(b, id_pstransf(b.dom), a).ok());
                CHECK(check_interchange(b, id_pstransf(b.dom), id_pstransf(a.dom)).ok());
            }
        CHECK(sweep_interchange(X, Z).ok());
        CHECK(sweep_interchange(space(fx().bc, fx().bc), Z).ok());
        auto bad = corrupted_beta();
        CHECK_FALSE(check_interchange(bad, id_pstransf(bad.dom), X.transfs[0]).ok());
    }

    TEST_CASE("rank-3 composites are perturbations")
    {
        const auto& X = space(fx().w1, fx().bc);
        const auto& Z = space(fx().bc, fx().bc);
        CHECK(sweep_hcomp_lemmas(X, Z).ok());
        auto I = identity_functor(fx().bc);
        auto a = id_pstransf(X.functors[0]);
        CHECK(check_hcomp_perturbations(HCell{id_pstransf(I)}, HCell{id_psmod(a)}).ok());
        CHECK(check_hcomp_perturbations(HCell{id_psmod(id_pstransf(I))}, HCell{a}).ok());
        auto bad = corrupted_beta();
        bool caught = false;
        for (const auto& A : X.mods)
            caught |= !check_hcomp_perturbations(HCell{bad}, HCell{A}).ok();
        CHECK(caught);
    }

    TEST_CASE("rank law over all sixteen cases and the questioned pair entries")
    {
        const auto& X = space(fx().w1, fx().bc);
        const auto& Z = space(fx().bc, fx().bc);
        auto r = sweep_hcomp_typing(X, Z);
        CHECK(r.ok());
        int cases = 0;
        for (const auto& [k, n] : r.instances)
            cases += k.rfind("case ", 0) == 0 && n > 0;
        CHECK(cases == 16);
        REQUIRE(r.notes.size() == 2);
        CHECK(r.notes[0].find("H*A pair entry: composite candidate passes 32/32, printed candidate passes 20/32") == 0);
        CHECK(r.notes[0].find("resolved to composite") != std::string::npos);
        CHECK(r.notes[1].find("B*G pair entry: composite candidate passes 8/8") == 0);
    }

    TEST_CASE("identity functors are units")
    {
        const auto& X = space(fx().w1, fx().bc);
        auto IB = identity_functor(fx().bc);
        auto IW = identity_functor(fx().w1);
        for (int d = 0; d < 4; ++d)
            for (int i = 0; i < X.space->count(d); ++i) {
                HCell x = X.value({d, i});
                CHECK(hcomp(HCell{IB}, x) == x);
                CHECK(hcomp(x, HCell{IW}) == x);
            }
    }

    TEST_CASE("middle mismatch is a typing error")
    {
        const auto& X = space(fx().w1, fx().bc);
        CHECK_THROWS_AS(hcomp(HCell{X.transfs[0]}, HCell{X.transfs[0]}), TypingError);
    }

    TEST_CASE("rank overflow lowers to an identity perturbation")
    {
        const auto& X = space(fx().w1, fx().bc);
        const auto& Z = space(fx().bc, fx().bc);
        HCell z = hcomp(HCell{Z.perts.back()}, HCell{X.perts.back()});
        REQUIRE(z.rank() == 3);
        const auto& P = std::get<Perturbation>(z.v);
        CHECK(P == id_pert(P.dom));
    }

    TEST_CASE("serial and parallel sweeps agree")
    {
        const auto& X = space(fx().w1, fx().bc);
        const auto& Z = space(fx().bc, fx().bc);
        auto s = sweep_hcomp_typing(X, Z, Exec::serial);
        auto p = sweep_hcomp_typing(X, Z, Exec::parallel);
        CHECK(s.instances == p.instances);
        CHECK(s.notes == p.notes);
    }
}
