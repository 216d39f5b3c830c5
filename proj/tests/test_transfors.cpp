#include "graycat/transfor.hpp"
#include "graycat/validate.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <set>

using namespace graycat;
using support::cell;
using support::fx;

namespace {

// alpha_e = 0, alpha_a = (a, u(a)), identity cocycle.
PseudoTransformation bc_transf(int u0, int u1)
{
    const auto& C = *fx().bc;
    GrayFunctor I = identity_functor(fx().bc);
    PseudoTransformation a{I, I, {0}, {cell(C, 2, "0").idx}, {}, {cell(C, 3, "(0,0)").idx}};
    a.at2.push_back(cell(C, 3, "(0," + std::to_string(u0) + ")").idx);
    a.at2.push_back(cell(C, 3, "(1," + std::to_string(u1) + ")").idx);
    return a;
}

std::vector<PseudoTransformation> all_transfs(const CatPtr& G, const CatPtr& H)
{
    std::vector<PseudoTransformation> out;
    auto fs = enumerate_functors(G, H);
    for (const auto& F : fs)
        for (const auto& F2 : fs)
            for (auto& t : enumerate_pstransf(F, F2))
                out.push_back(std::move(t));
    return out;
}

} // namespace

TEST_SUITE("transfors")
{
    TEST_CASE("identity transfors validate")
    {
        const auto& f = fx();
        for (const auto& C : {f.one, f.w1, f.w2, f.bc, f.chain2, f.s3}) {
            auto a = id_pstransf(identity_functor(C));
            CHECK(validate_pstransf(a).ok());
            auto A = id_psmod(a);
            CHECK(validate_psmod(A).ok());
            CHECK(validate_perturbation(id_pert(A)).ok());
        }
    }

    TEST_CASE("BC transformations from homomorphisms")
    {
        CHECK(validate_pstransf(bc_transf(0, 0)).ok());
        CHECK(validate_pstransf(bc_transf(0, 1)).ok());
        auto r = validate_pstransf(bc_transf(1, 0));
        CHECK(r.count("pstransf 2-cell identity") > 0);
    }

    TEST_CASE("enumerate_pstransf on the BC identity")
    {
        auto I = identity_functor(fx().bc);
        auto ts = enumerate_pstransf(I, I);
        REQUIRE(ts.size() == 2);
        CHECK(oracle::count_pstransf(I, I) == 2);
        CHECK(std::count(ts.begin(), ts.end(), bc_transf(0, 0)) == 1);
        CHECK(std::count(ts.begin(), ts.end(), bc_transf(0, 1)) == 1);
        auto one = identity_functor(fx().one);
        CHECK(enumerate_pstransf(one, one).size() == 1);
    }

    TEST_CASE("modification with a non-identity unit component")
    {
        auto a = bc_transf(0, 1);
        PseudoModification A = id_psmod(a);
        CHECK(validate_psmod(A).ok());
        A.at1[0] = cell(*fx().bc, 3, "(0,1)").idx;
        CHECK(validate_psmod(A).count("psmod unit") > 0);
    }

    TEST_CASE("BC modifications between transformations differing by u")
    {
        auto a = bc_transf(0, 0), b = bc_transf(0, 1);
        auto ms = enumerate_psmod(a, b);
        CHECK(ms.size() == oracle::count_psmod(a, b));
        for (const auto& m : ms)
            CHECK(validate_psmod(m).ok());
    }

    TEST_CASE("non-parallel perturbation component is structural")
    {
        auto A = id_psmod(bc_transf(0, 0));
        Perturbation P = id_pert(A);
        P.at0[0] = cell(*fx().bc, 3, "(1,0)").idx;
        CHECK(validate_perturbation(P).has_structural());
    }

    TEST_CASE("perturbations over walking(1) by direct evaluation")
    {
        auto ts = all_transfs(fx().w1, fx().bc);
        std::size_t checked = 0;
        for (const auto& a : ts)
            for (const auto& b : ts) {
                if (!(a.dom == b.dom && a.cod == b.cod))
                    continue;
                for (const auto& A : enumerate_psmod(a, b))
                    for (const auto& B : enumerate_psmod(a, b)) {
                        CHECK(enumerate_pert(A, B).size() == oracle::count_pert(A, B));
                        ++checked;
                    }
            }
        CHECK(checked > 0);
        auto A = id_psmod(ts[0]);
        CHECK(enumerate_pert(A, A).size() >= 1);
    }

    TEST_CASE("enumerated transformations: valid, distinct, invertible, normalized")
    {
        const auto& f = fx();
        struct Case {
            CatPtr G, H;
        };
        for (const auto& c : {Case{f.w1, f.bc}, Case{f.chain2, f.bc}, Case{f.bc, f.bc}, Case{f.w2, f.bc},
                              Case{f.chain2, f.s3}, Case{f.w1, f.s3}}) {
            auto ts = all_transfs(c.G, c.H);
            const auto& S = *c.G;
            const auto& T = *c.H;
            std::set<std::vector<int>> seen;
            for (const auto& a : ts) {
                CHECK(validate_pstransf(a).ok());
                std::vector<int> key = a.at0;
                key.insert(key.end(), a.at1.begin(), a.at1.end());
                key.insert(key.end(), a.at2.begin(), a.at2.end());
                key.insert(key.end(), a.coc.begin(), a.coc.end());
                key.insert(key.end(), a.dom.map[2].begin(), a.dom.map[2].end());
                key.insert(key.end(), a.cod.map[2].begin(), a.cod.map[2].end());
                key.insert(key.end(), a.dom.map[1].begin(), a.dom.map[1].end());
                key.insert(key.end(), a.cod.map[1].begin(), a.cod.map[1].end());
                CHECK(seen.insert(key).second);
                for (int f1 = 0; f1 < S.count(1); ++f1)
                    CHECK(inverse(T, a.f(f1)).has_value());
                for (int p = 0; p < S.count(2); ++p)
                    CHECK(inverse(T, a.phi(p)).has_value());
                for (const auto& e : S.table(Op::comp0).entries()) {
                    CHECK(inverse(T, a.c(e.a, e.b)).has_value());
                    if (S.is_identity(1, e.a) || S.is_identity(1, e.b))
                        CHECK(T.is_identity(3, a.c(e.a, e.b).idx));
                }
            }
        }
    }

    TEST_CASE("transformation counts against the naive oracle")
    {
        const auto& f = fx();
        struct Case {
            CatPtr G, H;
            std::size_t n;
        };
        for (const auto& c : {Case{f.one, f.bc, 1}, Case{f.w1, f.bc, 2}, Case{f.bc, f.bc, 4}}) {
            std::size_t naive = 0;
            auto fs = enumerate_functors(c.G, c.H);
            for (const auto& F : fs)
                for (const auto& F2 : fs)
                    naive += oracle::count_pstransf(F, F2);
            CHECK(naive == c.n);
            CHECK(all_transfs(c.G, c.H).size() == c.n);
        }
    }

    TEST_CASE("a violation found in a report is reproduced on its own")
    {
        auto a = bc_transf(1, 1);
        auto r = validate_pstransf(a);
        REQUIRE_FALSE(r.ok());
        auto again = validate_pstransf(a, Exec::serial);
        CHECK(again.violations == r.violations);
    }
}
