#include "graycat/functor.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <set>

using namespace graycat;
using support::cell;
using support::fx;

namespace {

// The BC endofunctor acting by phi_A on 2-cells and phi_U on U-labels.
GrayFunctor bc_endo(const CatPtr& C, int (*fa)(int), int (*fu)(int))
{
    GrayFunctor F{C, C, {}};
    F.map[0] = {0};
    F.map[1] = {0};
    for (int a = 0; a < 2; ++a)
        F.map[2].push_back(cell(*C, 2, std::to_string(fa(a))).idx);
    for (int i = 0; i < C->count(3); ++i) {
        const std::string& l = C->label(3, i);
        int a = l[1] - '0', u = l[3] - '0';
        F.map[3].push_back(cell(*C, 3, "(" + std::to_string(fa(a)) + "," + std::to_string(fu(u)) + ")").idx);
    }
    return F;
}

int ident(int v) { return v; }
int zero(int) { return 0; }

} // namespace

TEST_SUITE("gray_maps")
{
    TEST_CASE("identity functors validate")
    {
        const auto& f = fx();
        for (const auto& C : {f.one, f.w1, f.w2, f.bc, f.bc4, f.s3})
            CHECK(validate_functor(identity_functor(C)).ok());
    }

    TEST_CASE("BC endofunctor preserving c validates")
    {
        CHECK(validate_functor(bc_endo(fx().bc, ident, ident)).ok());
    }

    TEST_CASE("BC endofunctor killing U breaks tensor preservation")
    {
        auto r = validate_functor(bc_endo(fx().bc, ident, zero));
        REQUIRE_FALSE(r.ok());
        bool at_tensor = false;
        for (const auto& v : r.violations)
            at_tensor |= v.axiom == "functor tensor" && v.witness == std::vector<std::string>{"1", "1"};
        CHECK(at_tensor);
    }

    TEST_CASE("non-total map is structural")
    {
        GrayFunctor F = identity_functor(fx().bc);
        F.map[3].pop_back();
        CHECK_THROWS_AS(validate_functor(F), StructuralError);
    }

    TEST_CASE("composition with identities and of BC endofunctors")
    {
        auto fs = enumerate_functors(fx().bc, fx().bc);
        REQUIRE(fs.size() == 2);
        auto id = identity_functor(fx().bc);
        GrayFunctor z = fs[0] == id ? fs[1] : fs[0];
        CHECK(compose_functors(id, z) == z);
        CHECK(compose_functors(z, id) == z);
        CHECK(compose_functors(z, z) == z);
        CHECK(z.map[2] == std::vector<int>{0, 0});
        CHECK(compose_functors(id, id) == id);
        CHECK_THROWS(compose_functors(id, identity_functor(fx().w1)));
    }

    TEST_CASE("functor counts against the naive oracle")
    {
        const auto& f = fx();
        struct Case {
            CatPtr G, H;
            std::size_t n;
        };
        for (const auto& c : {Case{f.w1, f.bc, 1}, Case{f.bc, f.bc, 2}, Case{f.one, f.one, 1}, Case{f.one, f.bc, 1},
                              Case{f.chain2, f.bc, 1}, Case{f.w3, f.bc, 4}, Case{f.w2, f.bc4, 4}}) {
            CAPTURE(c.G->name());
            CAPTURE(c.H->name());
            CHECK(oracle::count_functors(c.G, c.H) == c.n);
            CHECK(enumerate_functors(c.G, c.H).size() == c.n);
        }
    }

    TEST_CASE("enumerated functors are valid, distinct and closed under composition")
    {
        const auto& f = fx();
        for (const auto& C : {f.bc, f.w1, f.w2, f.s3}) {
            auto fs = enumerate_functors(C, C);
            std::set<std::array<std::vector<int>, 4>> seen;
            for (const auto& F : fs) {
                CHECK(validate_functor(F).ok());
                CHECK(seen.insert(F.map).second);
            }
            for (const auto& G : fs)
                for (const auto& F : fs)
                    CHECK(seen.count(compose_functors(G, F).map) == 1);
        }
    }

    TEST_CASE("composition is associative")
    {
        auto fs = enumerate_functors(fx().s3, fx().s3);
        for (const auto& a : fs)
            for (const auto& b : fs)
                for (const auto& c : fs)
                    CHECK(compose_functors(a, compose_functors(b, c)) == compose_functors(compose_functors(a, b), c));
    }

    TEST_CASE("size bound rejects large searches")
    {
        auto old = size_bound();
        set_size_bound(10);
        CHECK_THROWS_AS(enumerate_functors(fx().bc4, fx().bc4), SizeBoundError);
        set_size_bound(old);
    }
}
