#include "graycat/mapping_space.hpp"
#include "graycat/sweep.hpp"
#include "graycat/validate.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <set>

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

GrayFunctor collapse(const CatPtr& G, const CatPtr& one)
{
    GrayFunctor F{G, one, {}};
    for (int d = 0; d < 4; ++d)
        F.map[d].assign(G->count(d), 0);
    return F;
}

bool bijective(const GrayFunctor& F)
{
    for (int d = 0; d < 4; ++d) {
        if (F.dom->count(d) != F.cod->count(d))
            return false;
        std::set<int> img(F.map[d].begin(), F.map[d].end());
        if (static_cast<int>(img.size()) != F.cod->count(d))
            return false;
    }
    return true;
}

const PseudoTransformation& nontrivial_beta()
{
    const auto& Z = space(fx().bc, fx().bc);
    auto I = identity_functor(fx().bc);
    for (const auto& b : Z.transfs)
        if (b.dom == I && b.cod == I && !(b == id_pstransf(I)))
            return b;
    FAIL("no nontrivial endo-transformation");
    return Z.transfs[0];
}

} // namespace

TEST_SUITE("mapping_space")
{
    TEST_CASE("cell counts match the enumeration oracle")
    {
        const auto& f = fx();
        struct Case {
            CatPtr G, H;
            std::array<int, 4> n;
        };
        for (const auto& c : {Case{f.one, f.bc, {1, 1, 2, 4}}, Case{f.w1, f.bc, {1, 2, 16, 64}},
                              Case{f.bc, f.bc, {2, 4, 8, 16}}}) {
            CAPTURE(c.G->name());
            const auto& M = space(c.G, c.H);
            auto o = oracle::mapping_space_counts(c.G, c.H);
            CHECK(o.functors == static_cast<std::size_t>(c.n[0]));
            CHECK(o.transfs == static_cast<std::size_t>(c.n[1]));
            CHECK(o.mods == static_cast<std::size_t>(c.n[2]));
            CHECK(o.perts == static_cast<std::size_t>(c.n[3]));
            for (int d = 0; d < 4; ++d)
                CHECK(M.space->count(d) == c.n[d]);
        }
    }

    TEST_CASE("built spaces are Gray-categories with a coherent dictionary")
    {
        const auto& f = fx();
        for (const auto& [G, H] : {std::pair{f.one, f.bc}, {f.w1, f.bc}, {f.bc, f.bc}, {f.one, f.one}, {f.one, f.w1}}) {
            const auto& M = space(G, H);
            CAPTURE(M.space->name());
            CHECK(validate_gray_category(*M.space).ok());
            CHECK(check_dictionary(M).ok());
            for (int d = 0; d < 4; ++d)
                for (int i = 0; i < M.space->count(d); ++i)
                    CHECK(M.find(M.value({d, i})) == i);
        }
    }

    TEST_CASE("postcomposition is functorial")
    {
        for (const auto& D : {fx().one, fx().w1}) {
            const auto& M = space(D, fx().bc);
            auto ks = enumerate_functors(fx().bc, fx().bc);
            CHECK(postcompose_map(identity_functor(fx().bc), M, M) == identity_functor(M.space));
            for (const auto& K1 : ks) {
                auto P1 = postcompose_map(K1, M, M);
                CHECK(validate_functor(P1).ok());
                for (const auto& K2 : ks)
                    CHECK(postcompose_map(compose_functors(K2, K1), M, M) ==
                          compose_functors(postcompose_map(K2, M, M), P1));
            }
        }
    }

    TEST_CASE("precomposition is contravariantly functorial")
    {
        const auto& from = space(fx().one, fx().bc);
        const auto& to = space(fx().w1, fx().bc);
        CHECK(precompose_map(identity_functor(fx().w1), to, to) == identity_functor(to.space));
        auto C = collapse(fx().w1, fx().one);
        REQUIRE(validate_functor(C).ok());
        auto PC = precompose_map(C, from, to);
        CHECK(validate_functor(PC).ok());
        for (const auto& E : enumerate_functors(fx().w1, fx().w1)) {
            auto PE = precompose_map(E, to, to);
            CHECK(validate_functor(PE).ok());
            CHECK(precompose_map(compose_functors(C, E), from, to) == compose_functors(PE, PC));
        }
    }

    TEST_CASE("L of an identity functor is the identity")
    {
        for (const auto& D : {fx().one, fx().w1}) {
            const auto& X = space(D, fx().bc);
            HCell L = L_map(HCell{identity_functor(fx().bc)}, X, X);
            CHECK(L == HCell{identity_functor(X.space)});
        }
    }

    TEST_CASE("L of beta at the terminal category is beta")
    {
        const auto& X = space(fx().one, fx().bc);
        const auto& b = nontrivial_beta();
        auto L = std::get<PseudoTransformation>(L_map(HCell{b}, X, X).v);
        auto iX = eval_i(X);
        for (int x = 0; x < X.space->count(0); ++x)
            CHECK(iX.map[1][L.at0[x]] == b.at0[iX.map[0][x]]);
        for (int f = 0; f < X.space->count(1); ++f)
            CHECK(iX.map[2][L.at1[f]] == b.at1[iX.map[1][f]]);
        for (int p = 0; p < X.space->count(2); ++p)
            CHECK(iX.map[3][L.at2[p]] == b.at2[iX.map[2][p]]);
    }

    TEST_CASE("L(beta) cocycle components are beta cocycles")
    {
        for (const auto& D : {fx().one, fx().w1}) {
            const auto& X = space(D, fx().bc);
            const auto& Z = space(fx().bc, fx().bc);
            std::size_t checked = 0;
            for (const auto& b : Z.transfs)
                for (const auto& a2 : X.transfs)
                    for (const auto& a1 : X.transfs) {
                        if (!(a1.cod == a2.dom))
                            continue;
                        auto P = L_cocycle(b, a2, a1);
                        CHECK(validate_perturbation(P).ok());
                        for (int x = 0; x < D->count(0); ++x)
                            CHECK(P.at0[x] == b.c(a2.at0[x], a1.at0[x]).idx);
                        ++checked;
                    }
            CHECK(checked > 0);
        }
    }

    TEST_CASE("L is well defined and preserves composites")
    {
        const auto& Z = space(fx().bc, fx().bc);
        for (const auto& D : {fx().one, fx().w1}) {
            const auto& X = space(D, fx().bc);
            CHECK(check_L_welldef(Z, X, X).ok());
            CHECK(sweep_L_homomorphism(Z, X, X).ok());
            for (const auto& b : Z.transfs) {
                CHECK(check_L_homomorphism(id_pstransf(b.cod), b, X, X).ok());
                CHECK(check_L_homomorphism(b, id_pstransf(b.dom), X, X).ok());
            }
        }
    }

    TEST_CASE("L rejects a corrupted transformation")
    {
        const auto& X = space(fx().w1, fx().bc);
        PseudoTransformation bad = nontrivial_beta();
        bad.at2[0] = cell(*fx().bc, 3, "(0,1)").idx;
        bool rejected = false;
        try {
            rejected = !validate(L_map(HCell{bad}, X, X)).ok();
        } catch (const ClosureError&) {
            rejected = true;
        }
        CHECK(rejected);
    }

    TEST_CASE("evaluation at the point is an isomorphism")
    {
        for (const auto& H : {fx().one, fx().bc, fx().w1}) {
            const auto& M = space(fx().one, H);
            auto i = eval_i(M);
            CHECK(validate_functor(i).ok());
            CHECK(bijective(i));
        }
        const auto& from = space(fx().one, fx().bc);
        for (const auto& K : enumerate_functors(fx().bc, fx().bc))
            CHECK(check_i_naturality(K, from, from).ok());
        CHECK(sweep_i_naturality(space(fx().bc, fx().bc), from, from).ok());
    }

    TEST_CASE("unit cells and extranaturality")
    {
        const auto& f = fx();
        for (const auto& G : {f.one, f.w1, f.bc}) {
            const auto& M = space(G, G);
            CHECK(M.functors.at(unit_j(M)) == identity_functor(G));
        }
        CHECK(sweep_j_extranaturality(space(f.w1, f.bc), space(f.w1, f.w1), space(f.bc, f.bc)).ok());
        CHECK(sweep_j_extranaturality(space(f.bc, f.bc), space(f.bc, f.bc), space(f.bc, f.bc)).ok());
        CHECK(sweep_j_extranaturality(space(f.one, f.bc), space(f.one, f.one), space(f.bc, f.bc)).ok());
    }
}
