#include "graycat/validate.hpp"

#include "check.hpp"
#include "parallel.hpp"

#include <array>
#include <string>

namespace graycat {

using detail::expect_equal;
using detail::labels;

namespace {

Cell c1(int i) { return {1, i}; }
Cell c2(int i) { return {2, i}; }
Cell c3(int i) { return {3, i}; }

struct Incidence {
    std::vector<std::vector<int>> two_by_src0, three_by_src0, three_by_src1;
    std::array<std::vector<std::pair<int, int>>, kOpCount> pairs;

    explicit Incidence(const FiniteGrayCategory& C)
    {
        const int n0 = C.count(0), n1 = C.count(1), n2 = C.count(2), n3 = C.count(3);
        two_by_src0.assign(n0, {});
        three_by_src0.assign(n0, {});
        three_by_src1.assign(n1, {});
        for (int i = 0; i < n2; ++i)
            two_by_src0[C.src0(c2(i))].push_back(i);
        for (int i = 0; i < n3; ++i) {
            three_by_src0[C.src0(c3(i))].push_back(i);
            three_by_src1[C.src(2, C.src(3, i))].push_back(i);
        }
        auto& p = pairs;
        for (int f = 0; f < n1; ++f)
            for (int g : C.with_src(1, C.tgt(1, f)))
                p[static_cast<int>(Op::comp0)].push_back({g, f});
        for (int phi = 0; phi < n2; ++phi)
            for (int g : C.with_src(1, C.tgt0(c2(phi))))
                p[static_cast<int>(Op::whisk_1on2)].push_back({g, phi});
        for (int f = 0; f < n1; ++f)
            for (int psi : two_by_src0[C.tgt(1, f)])
                p[static_cast<int>(Op::whisk_2on1)].push_back({psi, f});
        for (int gam = 0; gam < n3; ++gam)
            for (int g : C.with_src(1, C.tgt0(c3(gam))))
                p[static_cast<int>(Op::whisk_1on3)].push_back({g, gam});
        for (int f = 0; f < n1; ++f)
            for (int del : three_by_src0[C.tgt(1, f)])
                p[static_cast<int>(Op::whisk_3on1)].push_back({del, f});
        for (int phi = 0; phi < n2; ++phi)
            for (int psi : C.with_src(2, C.tgt(2, phi)))
                p[static_cast<int>(Op::comp1)].push_back({psi, phi});
        for (int del = 0; del < n3; ++del)
            for (int phi : C.with_src(2, C.tgt(2, C.src(3, del))))
                p[static_cast<int>(Op::whisk_2on3)].push_back({phi, del});
        for (int psi = 0; psi < n2; ++psi)
            for (int gam : three_by_src1[C.tgt(2, psi)])
                p[static_cast<int>(Op::whisk_3on2)].push_back({gam, psi});
        for (int gam = 0; gam < n3; ++gam)
            for (int del : C.with_src(3, C.tgt(3, gam)))
                p[static_cast<int>(Op::comp2)].push_back({del, gam});
        for (int phi = 0; phi < n2; ++phi)
            for (int psi : two_by_src0[C.tgt0(c2(phi))])
                p[static_cast<int>(Op::tensor)].push_back({psi, phi});
    }

    const std::vector<std::pair<int, int>>& of(Op op) const { return pairs[static_cast<int>(op)]; }
};

} // namespace

void check_structure(const FiniteGrayCategory& C)
{
    for (int d = 1; d <= 3; ++d)
        for (int i = 0; i < C.count(d); ++i) {
            int s = C.src(d, i), t = C.tgt(d, i);
            if (s < 0 || s >= C.count(d - 1) || t < 0 || t >= C.count(d - 1))
                throw StructuralError("dangling boundary on " + C.describe({d, i}));
        }
    for (int d = 0; d <= 2; ++d)
        for (int i = 0; i < C.count(d); ++i) {
            int e = C.identity_entry(d, i);
            if (e >= C.count(d + 1))
                throw StructuralError("dangling identity on " + C.describe({d, i}));
        }
    for (int d = 2; d <= 3; ++d)
        for (int i = 0; i < C.count(d); ++i) {
            int e = C.stored_inverse(d, i);
            if (e >= C.count(d))
                throw StructuralError("dangling inverse on " + C.describe({d, i}));
        }
    for (Op op : all_ops()) {
        const OpShape& s = op_shape(op);
        for (const auto& e : C.table(op).entries())
            if (e.a < 0 || e.a >= C.count(s.left) || e.b < 0 || e.b >= C.count(s.right) || e.c < 0 ||
                e.c >= C.count(s.result))
                throw StructuralError(std::string("dangling entry in table ") + s.name);
    }
}

ValidationReport validate_gray_category(const FiniteGrayCategory& C, Exec ex)
{
    check_structure(C);
    const Incidence I(C);
    const int n1 = C.count(1), n2 = C.count(2), n3 = C.count(3);
    ValidationReport out;
    auto family = [&](long n, auto&& fn) { out.merge(detail::run_instances(ex, n, fn)); };
    auto over_pairs = [&](Op op, auto&& fn) {
        const auto& P = I.of(op);
        family(static_cast<long>(P.size()), [&](long i, ValidationReport& r) { fn(P[i].first, P[i].second, r); });
    };

    // Globularity.
    family(n2 + n3, [&](long i, ValidationReport& r) {
        Cell c = i < n2 ? c2(static_cast<int>(i)) : c3(static_cast<int>(i - n2));
        ++r.instances["globularity"];
        Cell s = C.src(c), t = C.tgt(c);
        if (C.src(s) != C.src(t) || C.tgt(s) != C.tgt(t))
            r.add("globularity", labels(C, {c}), "src(src)=src(tgt), tgt(src)=tgt(tgt)", "mismatch");
    });

    // Identities exist and are loops on their cell.
    family(C.count(0) + n1 + n2, [&](long i, ValidationReport& r) {
        int d = 0;
        long k = i;
        while (k >= C.count(d)) {
            k -= C.count(d);
            ++d;
        }
        Cell c{d, static_cast<int>(k)};
        ++r.instances["identity boundary"];
        int e = C.identity_entry(d, c.idx);
        if (e < 0) {
            r.add("identity closure", labels(C, {c}), "identity present", "absent");
            return;
        }
        if (C.src(d + 1, e) != c.idx || C.tgt(d + 1, e) != c.idx)
            r.add("identity boundary", labels(C, {c}), C.label(c) + " => " + C.label(c),
                  C.label(d, C.src(d + 1, e)) + " => " + C.label(d, C.tgt(d + 1, e)));
    });

    // Totality and forced boundaries of every table.
    for (Op op : all_ops()) {
        const OpShape& s = op_shape(op);
        const std::string closure = std::string(s.name) + " closure";
        const std::string boundary = std::string(s.name) + " boundary";
        over_pairs(op, [&](int a, int b, ValidationReport& r) {
            ++r.instances[closure];
            std::vector<std::string> w{C.label(s.left, a), C.label(s.right, b)};
            int c = C.lookup(op, a, b);
            if (c < 0) {
                r.add(closure, w, "table entry", "absent");
                return;
            }
            ++r.instances[boundary];
            try {
                auto [fs, ft] = C.forced_boundary(op, a, b);
                int as = C.src(s.result, c), at = C.tgt(s.result, c);
                if (as != fs || at != ft)
                    r.add(boundary, w,
                          C.label(s.result, c) + " : " + C.label(s.result - 1, fs) + " -> " +
                              C.label(s.result - 1, ft),
                          C.label(s.result, c) + " : " + C.label(s.result - 1, as) + " -> " +
                              C.label(s.result - 1, at));
            } catch (const std::exception& e) {
                r.add(boundary, w, "forced boundary", e.what());
            }
        });
        for (const auto& e : C.table(op).entries())
            if (!C.compatible(op, e.a, e.b))
                out.add(boundary, {C.label(s.left, e.a), C.label(s.right, e.b)}, "no entry on non-incident pair",
                        C.label(s.result, e.c));
    }

    // ---- units ---------------------------------------------------------
    family(n1, [&](long i, ValidationReport& r) {
        Cell f = c1(static_cast<int>(i));
        auto w = [&] { return labels(C, {f}); };
        expect_equal(r, "unit comp0", C, w, [&] { return std::pair{C.h0(C.id(C.tgt(f)), f), f}; });
        expect_equal(r, "unit comp0", C, w, [&] { return std::pair{C.h0(f, C.id(C.src(f))), f}; });
    });
    family(n2, [&](long i, ValidationReport& r) {
        Cell phi = c2(static_cast<int>(i));
        auto w = [&] { return labels(C, {phi}); };
        expect_equal(r, "unit comp1", C, w, [&] { return std::pair{C.h1(C.id(C.tgt(phi)), phi), phi}; });
        expect_equal(r, "unit comp1", C, w, [&] { return std::pair{C.h1(phi, C.id(C.src(phi))), phi}; });
        expect_equal(r, "unit whisker #0", C, w,
                     [&] { return std::pair{C.h0(C.id(Cell{0, C.tgt0(phi)}), phi), phi}; });
        expect_equal(r, "unit whisker #0", C, w,
                     [&] { return std::pair{C.h0(phi, C.id(Cell{0, C.src0(phi)})), phi}; });
    });
    family(n3, [&](long i, ValidationReport& r) {
        Cell gam = c3(static_cast<int>(i));
        auto w = [&] { return labels(C, {gam}); };
        Cell psi = C.src(gam);
        expect_equal(r, "unit comp2", C, w, [&] { return std::pair{C.h2(C.id(C.tgt(gam)), gam), gam}; });
        expect_equal(r, "unit comp2", C, w, [&] { return std::pair{C.h2(gam, C.id(C.src(gam))), gam}; });
        expect_equal(r, "unit whisker #0", C, w,
                     [&] { return std::pair{C.h0(C.id(Cell{0, C.tgt0(gam)}), gam), gam}; });
        expect_equal(r, "unit whisker #0", C, w,
                     [&] { return std::pair{C.h0(gam, C.id(Cell{0, C.src0(gam)})), gam}; });
        expect_equal(r, "unit whisker #1", C, w, [&] { return std::pair{C.h1(C.id(C.tgt(psi)), gam), gam}; });
        expect_equal(r, "unit whisker #1", C, w, [&] { return std::pair{C.h1(gam, C.id(C.src(psi))), gam}; });
    });
    over_pairs(Op::comp0, [&](int g_, int f_, ValidationReport& r) {
        Cell g = c1(g_), f = c1(f_);
        auto w = [&] { return labels(C, {g, f}); };
        expect_equal(r, "whisker preserves identities", C, w,
                     [&] { return std::pair{C.h0(g, C.id(f)), C.id(C.h0(g, f))}; });
        expect_equal(r, "whisker preserves identities", C, w,
                     [&] { return std::pair{C.h0(C.id(g), f), C.id(C.h0(g, f))}; });
    });
    over_pairs(Op::whisk_1on2, [&](int g_, int phi_, ValidationReport& r) {
        Cell g = c1(g_), phi = c2(phi_);
        expect_equal(
            r, "whisker preserves identities", C, [&] { return labels(C, {g, phi}); },
            [&] { return std::pair{C.h0(g, C.id(phi)), C.id(C.h0(g, phi))}; });
        expect_equal(
            r, "tensor unit", C, [&] { return labels(C, {g, phi}); },
            [&] { return std::pair{C.tens(C.id(g), phi), C.id(C.h0(g, phi))}; });
    });
    over_pairs(Op::whisk_2on1, [&](int psi_, int f_, ValidationReport& r) {
        Cell psi = c2(psi_), f = c1(f_);
        expect_equal(
            r, "whisker preserves identities", C, [&] { return labels(C, {psi, f}); },
            [&] { return std::pair{C.h0(C.id(psi), f), C.id(C.h0(psi, f))}; });
        expect_equal(
            r, "tensor unit", C, [&] { return labels(C, {psi, f}); },
            [&] { return std::pair{C.tens(psi, C.id(f)), C.id(C.h0(psi, f))}; });
    });
    over_pairs(Op::comp1, [&](int psi_, int phi_, ValidationReport& r) {
        Cell psi = c2(psi_), phi = c2(phi_);
        auto w = [&] { return labels(C, {psi, phi}); };
        expect_equal(r, "whisker preserves identities", C, w,
                     [&] { return std::pair{C.h1(psi, C.id(phi)), C.id(C.h1(psi, phi))}; });
        expect_equal(r, "whisker preserves identities", C, w,
                     [&] { return std::pair{C.h1(C.id(psi), phi), C.id(C.h1(psi, phi))}; });
    });

    // ---- associativity -------------------------------------------------
    over_pairs(Op::comp0, [&](int g_, int f_, ValidationReport& r) {
        Cell g = c1(g_), f = c1(f_);
        for (int h_ : C.with_src(1, C.tgt(1, g_))) {
            Cell h = c1(h_);
            expect_equal(
                r, "assoc comp0", C, [&] { return labels(C, {h, g, f}); },
                [&] { return std::pair{C.h0(C.h0(h, g), f), C.h0(h, C.h0(g, f))}; });
        }
    });
    over_pairs(Op::comp1, [&](int psi_, int phi_, ValidationReport& r) {
        Cell psi = c2(psi_), phi = c2(phi_);
        for (int chi_ : C.with_src(2, C.tgt(2, psi_))) {
            Cell chi = c2(chi_);
            expect_equal(
                r, "assoc comp1", C, [&] { return labels(C, {chi, psi, phi}); },
                [&] { return std::pair{C.h1(C.h1(chi, psi), phi), C.h1(chi, C.h1(psi, phi))}; });
        }
    });
    over_pairs(Op::comp2, [&](int d_, int g_, ValidationReport& r) {
        Cell del = c3(d_), gam = c3(g_);
        for (int e_ : C.with_src(3, C.tgt(3, d_))) {
            Cell eps = c3(e_);
            expect_equal(
                r, "assoc comp2", C, [&] { return labels(C, {eps, del, gam}); },
                [&] { return std::pair{C.h2(C.h2(eps, del), gam), C.h2(eps, C.h2(del, gam))}; });
        }
    });
    for (Op op : {Op::whisk_1on2, Op::whisk_1on3}) {
        const int dim = op_shape(op).right;
        over_pairs(op, [&, dim](int g_, int x_, ValidationReport& r) {
            Cell g = c1(g_), x{dim, x_};
            for (int gp_ : C.with_src(1, C.tgt(1, g_))) {
                Cell gp = c1(gp_);
                expect_equal(
                    r, "whisker action left", C, [&] { return labels(C, {gp, g, x}); },
                    [&] { return std::pair{C.h0(C.h0(gp, g), x), C.h0(gp, C.h0(g, x))}; });
            }
            for (int f_ : C.with_tgt(1, C.src0(x))) {
                Cell f = c1(f_);
                expect_equal(
                    r, "whisker action middle", C, [&] { return labels(C, {g, x, f}); },
                    [&] { return std::pair{C.h0(C.h0(g, x), f), C.h0(g, C.h0(x, f))}; });
            }
        });
    }
    for (Op op : {Op::whisk_2on1, Op::whisk_3on1}) {
        const int dim = op_shape(op).left;
        over_pairs(op, [&, dim](int x_, int f_, ValidationReport& r) {
            Cell x{dim, x_}, f = c1(f_);
            for (int e_ : C.with_tgt(1, C.src(1, f_))) {
                Cell e = c1(e_);
                expect_equal(
                    r, "whisker action right", C, [&] { return labels(C, {x, f, e}); },
                    [&] { return std::pair{C.h0(C.h0(x, f), e), C.h0(x, C.h0(f, e))}; });
            }
        });
    }
    over_pairs(Op::whisk_2on3, [&](int phi_, int del_, ValidationReport& r) {
        Cell phi = c2(phi_), del = c3(del_);
        for (int pp_ : C.with_src(2, C.tgt(2, phi_))) {
            Cell pp = c2(pp_);
            expect_equal(
                r, "mid-whisker action left", C, [&] { return labels(C, {pp, phi, del}); },
                [&] { return std::pair{C.h1(C.h1(pp, phi), del), C.h1(pp, C.h1(phi, del))}; });
        }
        for (int psi_ : C.with_tgt(2, C.src(2, C.src(3, del_)))) {
            Cell psi = c2(psi_);
            expect_equal(
                r, "mid-whisker action middle", C, [&] { return labels(C, {phi, del, psi}); },
                [&] { return std::pair{C.h1(C.h1(phi, del), psi), C.h1(phi, C.h1(del, psi))}; });
        }
    });
    over_pairs(Op::whisk_3on2, [&](int gam_, int psi_, ValidationReport& r) {
        Cell gam = c3(gam_), psi = c2(psi_);
        for (int pp_ : C.with_tgt(2, C.src(2, psi_))) {
            Cell pp = c2(pp_);
            expect_equal(
                r, "mid-whisker action right", C, [&] { return labels(C, {gam, psi, pp}); },
                [&] { return std::pair{C.h1(C.h1(gam, psi), pp), C.h1(gam, C.h1(psi, pp))}; });
        }
    });

    // ---- functoriality of whiskers ------------------------------------
    over_pairs(Op::comp1, [&](int psi_, int phi_, ValidationReport& r) {
        Cell psi = c2(psi_), phi = c2(phi_);
        for (int g_ : C.with_src(1, C.tgt0(phi))) {
            Cell g = c1(g_);
            expect_equal(
                r, "whisker functoriality #1", C, [&] { return labels(C, {g, psi, phi}); },
                [&] { return std::pair{C.h0(g, C.h1(psi, phi)), C.h1(C.h0(g, psi), C.h0(g, phi))}; });
        }
        for (int f_ : C.with_tgt(1, C.src0(phi))) {
            Cell f = c1(f_);
            expect_equal(
                r, "whisker functoriality #1", C, [&] { return labels(C, {psi, phi, f}); },
                [&] { return std::pair{C.h0(C.h1(psi, phi), f), C.h1(C.h0(psi, f), C.h0(phi, f))}; });
        }
    });
    over_pairs(Op::comp2, [&](int d_, int g_, ValidationReport& r) {
        Cell del = c3(d_), gam = c3(g_);
        for (int x_ : C.with_src(1, C.tgt0(gam))) {
            Cell x = c1(x_);
            expect_equal(
                r, "whisker functoriality #2", C, [&] { return labels(C, {x, del, gam}); },
                [&] { return std::pair{C.h0(x, C.h2(del, gam)), C.h2(C.h0(x, del), C.h0(x, gam))}; });
        }
        for (int f_ : C.with_tgt(1, C.src0(gam))) {
            Cell f = c1(f_);
            expect_equal(
                r, "whisker functoriality #2", C, [&] { return labels(C, {del, gam, f}); },
                [&] { return std::pair{C.h0(C.h2(del, gam), f), C.h2(C.h0(del, f), C.h0(gam, f))}; });
        }
        Cell psi = C.src(gam);
        for (int phi_ : C.with_src(2, C.tgt(2, psi.idx))) {
            Cell phi = c2(phi_);
            expect_equal(
                r, "mid-whisker functoriality", C, [&] { return labels(C, {phi, del, gam}); },
                [&] { return std::pair{C.h1(phi, C.h2(del, gam)), C.h2(C.h1(phi, del), C.h1(phi, gam))}; });
        }
        for (int chi_ : C.with_tgt(2, C.src(2, psi.idx))) {
            Cell chi = c2(chi_);
            expect_equal(
                r, "mid-whisker functoriality", C, [&] { return labels(C, {del, gam, chi}); },
                [&] { return std::pair{C.h1(C.h2(del, gam), chi), C.h2(C.h1(del, chi), C.h1(gam, chi))}; });
        }
    });
    for (Op op : {Op::whisk_2on3, Op::whisk_3on2}) {
        over_pairs(op, [&, op](int a_, int b_, ValidationReport& r) {
            Cell a{op_shape(op).left, a_}, b{op_shape(op).right, b_};
            for (int g_ : C.with_src(1, C.tgt0(b))) {
                Cell g = c1(g_);
                expect_equal(
                    r, "whisker functoriality mid-whisker", C, [&] { return labels(C, {g, a, b}); },
                    [&] { return std::pair{C.h0(g, C.h1(a, b)), C.h1(C.h0(g, a), C.h0(g, b))}; });
            }
            for (int f_ : C.with_tgt(1, C.src0(b))) {
                Cell f = c1(f_);
                expect_equal(
                    r, "whisker functoriality mid-whisker", C, [&] { return labels(C, {a, b, f}); },
                    [&] { return std::pair{C.h0(C.h1(a, b), f), C.h1(C.h0(a, f), C.h0(b, f))}; });
            }
        });
    }
    family(n3, [&](long i, ValidationReport& r) {
        Cell gam = c3(static_cast<int>(i));
        for (int gp_ : I.three_by_src1[C.tgt(2, C.src(3, gam.idx))]) {
            Cell gp = c3(gp_);
            expect_equal(
                r, "interchange", C, [&] { return labels(C, {gp, gam}); },
                [&] {
                    Cell lhs = C.h2(C.h1(gp, C.tgt(gam)), C.h1(C.src(gp), gam));
                    Cell rhs = C.h2(C.h1(C.tgt(gp), gam), C.h1(gp, C.src(gam)));
                    return std::pair{lhs, rhs};
                });
        }
    });

    // ---- tensor --------------------------------------------------------
    over_pairs(Op::tensor, [&](int psi_, int phi_, ValidationReport& r) {
        Cell psi = c2(psi_), phi = c2(phi_);
        Cell f = C.src(phi), fp = C.tgt(phi), g = C.src(psi), gp = C.tgt(psi);
        for (int q_ : C.with_src(2, gp.idx)) {
            Cell q = c2(q_);
            expect_equal(
                r, "tensor comp1 left", C, [&] { return labels(C, {q, psi, phi}); },
                [&] {
                    Cell lhs = C.tens(C.h1(q, psi), phi);
                    Cell rhs = C.h2(C.h1(C.h0(q, fp), C.tens(psi, phi)), C.h1(C.tens(q, phi), C.h0(psi, f)));
                    return std::pair{lhs, rhs};
                });
        }
        for (int p_ : C.with_src(2, fp.idx)) {
            Cell p = c2(p_);
            expect_equal(
                r, "tensor comp1 right", C, [&] { return labels(C, {psi, p, phi}); },
                [&] {
                    Cell lhs = C.tens(psi, C.h1(p, phi));
                    Cell rhs = C.h2(C.h1(C.tens(psi, p), C.h0(g, phi)), C.h1(C.h0(gp, p), C.tens(psi, phi)));
                    return std::pair{lhs, rhs};
                });
        }
        for (int gam_ : C.with_src(3, phi_)) {
            Cell gam = c3(gam_);
            expect_equal(
                r, "tensor naturality right", C, [&] { return labels(C, {psi, gam}); },
                [&] {
                    Cell lhs = C.h2(C.tens(psi, C.tgt(gam)), C.h1(C.h0(gp, gam), C.h0(psi, f)));
                    Cell rhs = C.h2(C.h1(C.h0(psi, fp), C.h0(g, gam)), C.tens(psi, phi));
                    return std::pair{lhs, rhs};
                });
        }
        for (int del_ : C.with_src(3, psi_)) {
            Cell del = c3(del_);
            expect_equal(
                r, "tensor naturality left", C, [&] { return labels(C, {del, phi}); },
                [&] {
                    Cell lhs = C.h2(C.tens(C.tgt(del), phi), C.h1(C.h0(gp, phi), C.h0(del, f)));
                    Cell rhs = C.h2(C.h1(C.h0(del, fp), C.h0(g, phi)), C.tens(psi, phi));
                    return std::pair{lhs, rhs};
                });
        }
        for (int h_ : C.with_src(1, C.tgt0(psi))) {
            Cell h = c1(h_);
            expect_equal(
                r, "tensor whisker left", C, [&] { return labels(C, {h, psi, phi}); },
                [&] { return std::pair{C.h0(h, C.tens(psi, phi)), C.tens(C.h0(h, psi), phi)}; });
        }
        for (int e_ : C.with_tgt(1, C.src0(phi))) {
            Cell e = c1(e_);
            expect_equal(
                r, "tensor whisker right", C, [&] { return labels(C, {psi, phi, e}); },
                [&] { return std::pair{C.h0(C.tens(psi, phi), e), C.tens(psi, C.h0(phi, e))}; });
        }
    });
    over_pairs(Op::whisk_1on2, [&](int k_, int phi_, ValidationReport& r) {
        Cell k = c1(k_), phi = c2(phi_);
        for (int psi_ : I.two_by_src0[C.tgt(1, k_)]) {
            Cell psi = c2(psi_);
            expect_equal(
                r, "tensor whisker middle", C, [&] { return labels(C, {psi, k, phi}); },
                [&] { return std::pair{C.tens(C.h0(psi, k), phi), C.tens(psi, C.h0(k, phi))}; });
        }
    });

    // ---- stored inverse witnesses ----------------------------------------
    for (int d = 2; d <= 3; ++d) {
        const Op comp = d == 2 ? Op::comp1 : Op::comp2;
        for (int i = 0; i < C.count(d); ++i) {
            int j = C.stored_inverse(d, i);
            if (j < 0)
                continue;
            Cell a{d, i}, b{d, j};
            ++out.instances["inverse witness"];
            int l = C.lookup(comp, j, i), rr = C.lookup(comp, i, j);
            if (l < 0 || rr < 0 || l != C.identity_entry(d - 1, C.src(d, i)) ||
                rr != C.identity_entry(d - 1, C.tgt(d, i)))
                out.add("inverse witness", labels(C, {a, b}), "two-sided inverse", "not an inverse");
        }
    }
    return out;
}

Cell compose(const FiniteGrayCategory& C, Op op, Cell left, Cell right)
{
    if (op != Op::comp0 && op != Op::comp1 && op != Op::comp2)
        throw TypingError("compose expects comp0, comp1 or comp2");
    const OpShape& s = op_shape(op);
    if (left.dim != s.left || right.dim != s.right)
        throw TypingError(std::string(s.name) + ": wrong argument dimensions");
    return {s.result, C.apply(op, left.idx, right.idx)};
}

Cell whisker(const FiniteGrayCategory& C, Op kind, Cell left, Cell right)
{
    if (kind == Op::comp0 || kind == Op::comp1 || kind == Op::comp2 || kind == Op::tensor)
        throw TypingError("not a whisker table");
    const OpShape& s = op_shape(kind);
    if (left.dim != s.left || right.dim != s.right)
        throw TypingError(std::string(s.name) + ": wrong argument dimensions");
    return {s.result, C.apply(kind, left.idx, right.idx)};
}

Cell tensor(const FiniteGrayCategory& C, Cell psi, Cell phi) { return C.tens(psi, phi); }

Cell identity(const FiniteGrayCategory& C, Cell c) { return C.id(c); }

std::optional<Cell> inverse(const FiniteGrayCategory& C, Cell c)
{
    auto r = C.inverse(c.dim, c.idx);
    if (!r)
        return std::nullopt;
    return Cell{c.dim, *r};
}

} // namespace graycat
