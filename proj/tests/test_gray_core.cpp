#include "graycat/validate.hpp"
#include "mutation.hpp"
#include "support.hpp"

using namespace graycat;
using support::cell;
using support::fx;

TEST_SUITE("gray_core")
{
    TEST_CASE("every shipped fixture is a Gray-category")
    {
        const auto& f = fx();
        for (const auto& C : {f.one, f.w1, f.w2, f.w3, f.bc, f.bc0, f.bc4, f.chain2, f.s3}) {
            CAPTURE(C->name());
            auto r = validate_gray_category(*C);
            CHECK_MESSAGE(r.ok(), format_report(r, C->name()));
        }
        CHECK(validate_gray_category(build_codiscrete_s3()).ok());
        CHECK(validate_gray_category(FiniteGrayCategory("empty")).ok());
    }

    TEST_CASE("trivial groups give the terminal category")
    {
        auto T = build_bicharacter_gray(AbelianGroup::trivial(), AbelianGroup::trivial(), {0}, "T");
        for (int d = 0; d < 4; ++d)
            CHECK(T.count(d) == 1);
        CHECK(validate_gray_category(T).ok());
    }

    TEST_CASE("BC cell counts and bicharacter labels")
    {
        const auto& C = *fx().bc;
        CHECK(C.count(0) == 1);
        CHECK(C.count(1) == 1);
        CHECK(C.count(2) == 2);
        CHECK(C.count(3) == 4);
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < 2; ++a) {
                Cell t = tensor(C, {2, b}, {2, a});
                CHECK(C.label(t) == "(" + std::to_string((a + b) % 2) + "," + std::to_string(a * b) + ")");
            }
    }

    TEST_CASE("non-bilinear bicharacter is rejected")
    {
        auto Z2 = AbelianGroup::cyclic(2);
        CHECK_THROWS_AS(build_bicharacter_gray(Z2, Z2, {1, 0, 0, 1}), std::invalid_argument);
    }

    TEST_CASE("compositions in BC")
    {
        const auto& C = *fx().bc;
        CHECK(compose(C, Op::comp0, cell(C, 1, "e"), cell(C, 1, "e")) == cell(C, 1, "e"));
        CHECK(compose(C, Op::comp1, cell(C, 2, "1"), cell(C, 2, "1")) == cell(C, 2, "0"));
        CHECK(compose(C, Op::comp2, cell(C, 3, "(1,1)"), cell(C, 3, "(1,0)")) == cell(C, 3, "(1,1)"));
        CHECK_THROWS_AS(compose(C, Op::comp2, cell(C, 3, "(1,1)"), cell(C, 3, "(0,0)")), TypingError);
    }

    TEST_CASE("whiskers in BC")
    {
        const auto& C = *fx().bc;
        CHECK(whisker(C, Op::whisk_1on2, cell(C, 1, "e"), cell(C, 2, "1")) == cell(C, 2, "1"));
        CHECK(whisker(C, Op::whisk_2on3, cell(C, 2, "1"), cell(C, 3, "(1,1)")) == cell(C, 3, "(0,1)"));
        const auto& W = *fx().w1;
        for (const auto& e : W.table(Op::comp0).entries()) {
            Cell g{1, e.a}, f{1, e.b};
            CHECK(whisker(W, Op::whisk_1on2, g, identity(W, f)) == identity(W, {1, e.c}));
        }
    }

    TEST_CASE("tensors in BC")
    {
        const auto& C = *fx().bc;
        CHECK(tensor(C, cell(C, 2, "1"), cell(C, 2, "1")) == cell(C, 3, "(0,1)"));
        CHECK(tensor(C, cell(C, 2, "0"), cell(C, 2, "1")) == cell(C, 3, "(1,0)"));
        for (int psi = 0; psi < C.count(2); ++psi) {
            Cell id2 = identity(C, cell(C, 1, "e"));
            CHECK(tensor(C, {2, psi}, id2) == identity(C, {2, psi}));
        }
    }

    TEST_CASE("identities")
    {
        const auto& C = *fx().bc;
        CHECK(identity(C, cell(C, 2, "1")) == cell(C, 3, "(1,0)"));
        const auto& W = *fx().w1;
        Cell x = cell(W, 0, "x");
        Cell ix = identity(W, x);
        CHECK(W.src(ix) == x);
        CHECK(W.tgt(ix) == x);
        Cell iix = identity(W, ix);
        CHECK(W.src(iix) == ix);
        CHECK_THROWS_AS(identity(C, cell(C, 3, "(0,0)")), TypingError);
    }

    TEST_CASE("inverses")
    {
        const auto& C = *fx().bc;
        CHECK(inverse(C, cell(C, 2, "1")) == cell(C, 2, "1"));
        CHECK(inverse(C, cell(C, 3, "(1,1)")) == cell(C, 3, "(1,1)"));
        Cell ide = identity(C, cell(C, 1, "e"));
        CHECK(inverse(C, ide) == ide);
        CHECK_FALSE(inverse(*fx().w2, cell(*fx().w2, 2, "phi")).has_value());
    }

    TEST_CASE("walking cells")
    {
        const auto& W1 = *fx().w1;
        CHECK(W1.count(0) == 2);
        CHECK(W1.count(1) == 3);
        const auto& W2 = *fx().w2;
        CHECK(W2.count(1) == 4);
        CHECK(W2.count(2) == 5);
        CHECK(W2.count(3) == 5);
    }

    TEST_CASE("rebinding tensor(1,1) breaks the tensor boundary")
    {
        FiniteGrayCategory C = bc_z2();
        C.set(Op::tensor, 1, 1, cell(C, 3, "(1,0)").idx);
        auto r = validate_gray_category(C);
        CHECK(r.count("tensor boundary") > 0);
    }

    TEST_CASE("missing identity is a closure violation")
    {
        FiniteGrayCategory C = bc_z2();
        C.clear_identity(2, 1);
        C.finalize();
        CHECK(validate_gray_category(C).count("identity closure") > 0);
    }

    TEST_CASE("dangling identity is a structural error")
    {
        FiniteGrayCategory C = bc_z2();
        C.set_identity(2, 1, 17);
        CHECK_THROWS_AS(check_structure(C), StructuralError);
    }

    TEST_CASE("serial and parallel validation agree")
    {
        FiniteGrayCategory C = bc_z4();
        C.set(Op::comp1, 1, 1, 3);
        auto s = validate_gray_category(C, Exec::serial);
        auto p = validate_gray_category(C, Exec::parallel);
        CHECK(s.violations == p.violations);
        CHECK(s.instances == p.instances);
    }

    TEST_CASE("single-entry mutants of BC are detected")
    {
        auto mutants = mutation::single_entry_mutants(*fx().bc);
        CHECK(mutants.size() == 123);
        std::size_t caught = 0;
        for (const auto& m : mutants) {
            if (mutation::detected(m.cat)) {
                ++caught;
                continue;
            }
            CAPTURE(m.what);
            CHECK(m.what == "tensor(1, 1) = (0,0)");
            CHECK(mutation::isomorphic(support::share(m.cat), fx().bc0));
        }
        CHECK(caught == 122);
    }
}
