#include "graycat/transfor.hpp"

#include "axioms.hpp"
#include "check.hpp"
#include "enumerate.hpp"
#include "parallel.hpp"

#include <array>
#include <string>

namespace graycat {

Cell PseudoTransformation::c(int f2, int f1) const
{
    const int n1 = source().count(1);
    int v = coc.at(static_cast<std::size_t>(f2) * n1 + f1);
    if (v < 0)
        throw TypingError("cocycle requested on a non-composable pair");
    return {3, v};
}

namespace {

using Args = std::array<int, 3>;

void check_sizes(const char* what, const std::vector<int>& v, int n, int range)
{
    if (static_cast<int>(v.size()) != n)
        throw StructuralError(std::string(what) + " is not total");
    for (int c : v)
        if (c < 0 || c >= range)
            throw StructuralError(std::string(what) + " has a dangling value");
}

void check_parallel(const GrayFunctor& F, const GrayFunctor& G)
{
    if (!F.dom || !F.cod || F.dom.get() != G.dom.get() || F.cod.get() != G.cod.get())
        throw StructuralError("functors are not parallel");
    for (int d = 0; d < 4; ++d)
        if (static_cast<int>(F.map[d].size()) != F.dom->count(d) ||
            static_cast<int>(G.map[d].size()) != G.dom->count(d))
            throw StructuralError("functor map is not total");
}

// Records a structural violation when `value` does not have the boundary
// returned by `expected`.
template <typename Witness, typename Expected>
void check_boundary(ValidationReport& r, const char* axiom, const FiniteGrayCategory& H, Witness&& witness,
                    Cell value, Expected&& expected)
{
    ++r.instances[axiom];
    try {
        auto [s, t] = expected();
        if (H.src(value) != s || H.tgt(value) != t)
            r.add(axiom, witness(), H.describe(s) + " => " + H.describe(t),
                  H.describe(H.src(value)) + " => " + H.describe(H.tgt(value)), true);
    } catch (const TypingError& e) {
        r.add(axiom, witness(), "well-typed boundary", e.what(), true);
    } catch (const ClosureError& e) {
        r.add(axiom, witness(), "defined boundary", e.what(), true);
    }
}

std::vector<Args> composable_pairs(const FiniteGrayCategory& C)
{
    std::vector<Args> out;
    for (const auto& e : C.table(Op::comp0).entries())
        out.push_back({e.a, e.b, e.c});
    return out;
}

std::vector<Args> composable_triples(const FiniteGrayCategory& C)
{
    std::vector<Args> out;
    for (const auto& e : C.table(Op::comp0).entries())
        for (int f3 : C.with_src(1, C.tgt(1, e.a)))
            out.push_back({f3, e.a, e.b});
    return out;
}

template <typename Fn>
void for_instances(ValidationReport& out, Exec ex, const std::vector<Args>& args, Fn&& fn)
{
    out.merge(detail::run_instances(ex, static_cast<long>(args.size()),
                                    [&](long i, ValidationReport& r) { fn(args[i], r); }));
}

std::vector<Args> cells_of(const FiniteGrayCategory& C, int dim)
{
    std::vector<Args> out;
    for (int i = 0; i < C.count(dim); ++i)
        out.push_back({i, 0, 0});
    return out;
}

std::pair<Cell, Cell> psmod_at1_boundary(const PseudoModification& A, int f)
{
    const auto& C = A.source();
    const auto& H = A.target();
    int x = C.src(1, f), y = C.tgt(1, f);
    Cell F = A.dom.dom({1, f}), G = A.dom.cod({1, f});
    return {H.h1(A.cod.f(f), H.h0(G, A.x(x))), H.h1(H.h0(A.x(y), F), A.dom.f(f))};
}

void check_invertible(ValidationReport& r, const char* axiom, const FiniteGrayCategory& H,
                      const std::vector<std::string>& witness, Cell c)
{
    ++r.instances[axiom];
    if (!H.inverse(c.dim, c.idx))
        r.add(axiom, witness, "invertible cell", H.describe(c));
}

} // namespace

std::pair<Cell, Cell> at1_boundary(const PseudoTransformation& a, int f)
{
    const auto& C = a.source();
    const auto& H = a.target();
    Cell F = a.dom({1, f}), G = a.cod({1, f});
    return {H.h0(G, a.x(C.src(1, f))), H.h0(a.x(C.tgt(1, f)), F)};
}

std::pair<Cell, Cell> at2_boundary(const PseudoTransformation& a, int phi)
{
    const auto& C = a.source();
    const auto& H = a.target();
    Cell p{2, phi};
    int f = C.src(2, phi), f2 = C.tgt(2, phi);
    int x = C.src(1, f), y = C.tgt(1, f);
    return {H.h1(H.h0(a.x(y), a.dom(p)), a.f(f)), H.h1(a.f(f2), H.h0(a.cod(p), a.x(x)))};
}

std::pair<Cell, Cell> coc_boundary(const PseudoTransformation& a, int f2, int f1)
{
    const auto& C = a.source();
    const auto& H = a.target();
    int f21 = C.apply(Op::comp0, f2, f1);
    return {H.h1(H.h0(a.f(f2), a.dom({1, f1})), H.h0(a.cod({1, f2}), a.f(f1))), a.f(f21)};
}

ValidationReport validate_pstransf(const PseudoTransformation& a, Exec ex)
{
    check_parallel(a.dom, a.cod);
    const FiniteGrayCategory& C = a.source();
    const FiniteGrayCategory& H = a.target();
    const int n1 = C.count(1);
    check_sizes("pstransf at0", a.at0, C.count(0), H.count(1));
    check_sizes("pstransf at1", a.at1, n1, H.count(2));
    check_sizes("pstransf at2", a.at2, C.count(2), H.count(3));
    if (static_cast<int>(a.coc.size()) != n1 * n1)
        throw StructuralError("pstransf coc is not total");
    for (int f2 = 0; f2 < n1; ++f2)
        for (int f1 = 0; f1 < n1; ++f1) {
            int v = a.coc[static_cast<std::size_t>(f2) * n1 + f1];
            bool composable = C.lookup(Op::comp0, f2, f1) >= 0;
            if (composable && (v < 0 || v >= H.count(3)))
                throw StructuralError("pstransf coc missing on " + C.label(1, f2) + ", " + C.label(1, f1));
            if (!composable && v != -1)
                throw StructuralError("pstransf coc set on non-composable " + C.label(1, f2) + ", " +
                                      C.label(1, f1));
        }

    ValidationReport out;
    const char* B = "pstransf boundary";
    for (int x = 0; x < C.count(0); ++x) {
        ++out.instances[B];
        if (H.src(1, a.at0[x]) != a.dom.map[0][x] || H.tgt(1, a.at0[x]) != a.cod.map[0][x])
            out.add(B, {C.label(0, x)}, "F" + C.label(0, x) + " -> G" + C.label(0, x), H.describe(a.x(x)), true);
    }
    for (int f = 0; f < n1; ++f)
        check_boundary(out, B, H, [&] { return std::vector<std::string>{C.label(1, f)}; }, a.f(f),
                       [&] { return at1_boundary(a, f); });
    if (out.has_structural())
        return out;
    for (int p = 0; p < C.count(2); ++p)
        check_boundary(out, B, H, [&] { return std::vector<std::string>{C.label(2, p)}; }, a.phi(p),
                       [&] { return at2_boundary(a, p); });
    const auto pairs = composable_pairs(C);
    for (const auto& [f2, f1, f21] : pairs)
        check_boundary(out, B, H, [&] { return std::vector<std::string>{C.label(1, f2), C.label(1, f1)}; },
                       a.c(f2, f1), [&] { return coc_boundary(a, f2, f1); });
    if (out.has_structural())
        return out;

    const char* INV = "pstransf invertible";
    for (int f = 0; f < n1; ++f)
        check_invertible(out, INV, H, {C.label(1, f)}, a.f(f));
    for (int p = 0; p < C.count(2); ++p)
        check_invertible(out, INV, H, {C.label(2, p)}, a.phi(p));
    for (const auto& [f2, f1, f21] : pairs)
        check_invertible(out, INV, H, {C.label(1, f2), C.label(1, f1)}, a.c(f2, f1));

    auto F = [&](int dim, int i) { return a.dom({dim, i}); };
    auto G = [&](int dim, int i) { return a.cod({dim, i}); };

    for (int x = 0; x < C.count(0); ++x)
        detail::expect_equal(
            out, "pstransf identity 1-cell", H, [&] { return std::vector<std::string>{C.label(0, x)}; },
            [&] { return std::pair{a.f(C.id(0, x)), H.id(a.x(x))}; });

    for_instances(out, ex, cells_of(C, 3), [&](const Args& g, ValidationReport& r) {
        const int gam = g[0];
        const int phi = C.src(3, gam), phi2 = C.tgt(3, gam);
        const int f = C.src(2, phi), f2 = C.tgt(2, phi);
        const int x = C.src(1, f), y = C.tgt(1, f);
        detail::expect_equal(
            r, "pstransf 3-cell naturality", H, [&] { return std::vector<std::string>{C.label(3, gam)}; }, [&] {
                Cell lhs = H.h2(a.phi(phi2), H.h1(H.h0(a.x(y), F(3, gam)), a.f(f)));
                Cell rhs = H.h2(H.h1(a.f(f2), H.h0(G(3, gam), a.x(x))), a.phi(phi));
                return std::pair{lhs, rhs};
            });
    });

    std::vector<Args> comp1s;
    for (const auto& e : C.table(Op::comp1).entries())
        comp1s.push_back({e.a, e.b, e.c});
    for_instances(out, ex, comp1s, [&](const Args& e, ValidationReport& r) {
        const auto [phi2, phi, comp] = e;
        const int f = C.src(2, phi);
        const int x = C.src(1, f), y = C.tgt(1, f);
        detail::expect_equal(
            r, "pstransf 2-cell composition", H,
            [&] { return std::vector<std::string>{C.label(2, phi2), C.label(2, phi)}; }, [&] {
                Cell rhs = H.h2(H.h1(a.phi(phi2), H.h0(G(2, phi), a.x(x))),
                                H.h1(H.h0(a.x(y), F(2, phi2)), a.phi(phi)));
                return std::pair{a.phi(comp), rhs};
            });
    });

    for (int f = 0; f < n1; ++f)
        detail::expect_equal(
            out, "pstransf 2-cell identity", H, [&] { return std::vector<std::string>{C.label(1, f)}; },
            [&] { return std::pair{a.phi(C.id(1, f)), H.id(a.f(f))}; });

    for_instances(out, ex, composable_triples(C), [&](const Args& t, ValidationReport& r) {
        const auto [f3, f2, f1] = t;
        detail::expect_equal(
            r, "pstransf cocycle", H,
            [&] { return std::vector<std::string>{C.label(1, f3), C.label(1, f2), C.label(1, f1)}; }, [&] {
                const int f21 = C.apply(Op::comp0, f2, f1);
                const int f32 = C.apply(Op::comp0, f3, f2);
                Cell lhs = H.h2(a.c(f3, f21),
                                H.h1(H.h0(a.f(f3), F(1, f21)), H.h0(G(1, f3), a.c(f2, f1))));
                Cell rhs = H.h2(a.c(f32, f1),
                                H.h1(H.h0(a.c(f3, f2), F(1, f1)), H.h0(G(1, f32), a.f(f1))));
                return std::pair{lhs, rhs};
            });
    });

    for (int f = 0; f < n1; ++f) {
        const int x = C.src(1, f), y = C.tgt(1, f);
        detail::expect_equal(
            out, "pstransf cocycle normalization", H,
            [&] { return std::vector<std::string>{C.label(1, C.id(0, y)), C.label(1, f)}; },
            [&] { return std::pair{a.c(C.id(0, y), f), H.id(a.f(f))}; });
        detail::expect_equal(
            out, "pstransf cocycle normalization", H,
            [&] { return std::vector<std::string>{C.label(1, f), C.label(1, C.id(0, x))}; },
            [&] { return std::pair{a.c(f, C.id(0, x)), H.id(a.f(f))}; });
    }

    // gamma : g => g' whiskered by f on the right: gamma #0 f.
    std::vector<Args> left;
    for (const auto& e : C.table(Op::whisk_2on1).entries())
        left.push_back({e.a, e.b, e.c});
    for_instances(out, ex, left, [&](const Args& e, ValidationReport& r) {
        const auto [gam, f, gf] = e;
        const int g = C.src(2, gam), g2 = C.tgt(2, gam);
        const int x = C.src(1, f), z = C.tgt(1, g);
        detail::expect_equal(
            r, "pstransf left whiskering", H,
            [&] { return std::vector<std::string>{C.label(2, gam), C.label(1, f)}; }, [&] {
                Cell s1 = H.h1(H.h0(a.phi(gam), F(1, f)), H.h0(G(1, g), a.f(f)));
                Cell s2 = H.h1(H.h0(a.f(g2), F(1, f)), H.inv(H.tens(G(2, gam), a.f(f))));
                Cell s3 = H.h1(a.c(g2, f), H.h0(G(2, gf), a.x(x)));
                Cell s4 = H.h1(H.h0(a.x(z), F(2, gf)), a.c(g, f));
                Cell s5 = a.phi(gf);
                return std::pair{H.h2(s3, s2, s1), H.h2(s5, s4)};
            });
    });

    // delta : f => f' whiskered by g on the left: g #0 delta.
    std::vector<Args> right;
    for (const auto& e : C.table(Op::whisk_1on2).entries())
        right.push_back({e.a, e.b, e.c});
    for_instances(out, ex, right, [&](const Args& e, ValidationReport& r) {
        const auto [g, del, gd] = e;
        const int f = C.src(2, del), f2 = C.tgt(2, del);
        const int x = C.src(1, f), z = C.tgt(1, g);
        detail::expect_equal(
            r, "pstransf right whiskering", H,
            [&] { return std::vector<std::string>{C.label(1, g), C.label(2, del)}; }, [&] {
                Cell s1 = H.h1(H.tens(a.f(g), F(2, del)), H.h0(G(1, g), a.f(f)));
                Cell s2 = H.h1(H.h0(a.f(g), F(1, f2)), H.h0(G(1, g), a.phi(del)));
                Cell s3 = H.h1(a.c(g, f2), H.h0(G(2, gd), a.x(x)));
                Cell s4 = H.h1(H.h0(a.x(z), F(2, gd)), a.c(g, f));
                Cell s5 = a.phi(gd);
                return std::pair{H.h2(s3, s2, s1), H.h2(s5, s4)};
            });
    });
    return out;
}

namespace detail {

std::pair<Cell, Cell> psmod_cocycle_sides(const PseudoModification& A, int f2, int f1, Cell slot)
{
    const auto& C = A.source();
    const auto& H = A.target();
    const auto& a = A.dom;
    const auto& b = A.cod;
    const int f21 = C.apply(Op::comp0, f2, f1);
    const int x = C.src(1, f1), z = C.tgt(1, f2);
    auto F = [&](int dim, int i) { return a.dom({dim, i}); };
    auto G = [&](int dim, int i) { return a.cod({dim, i}); };
    Cell s1 = H.h1(H.h0(b.f(f2), F(1, f1)), H.h0(G(1, f2), A.f(f1)));
    Cell s2 = H.h1(H.h0(A.f(f2), F(1, f1)), H.h0(G(1, f2), a.f(f1)));
    Cell s3 = H.h1(H.h0(A.x(z), F(1, f21)), a.c(f2, f1));
    Cell s4 = H.h1(b.c(f2, f1), H.h0(G(1, f21), A.x(x)));
    return {H.h2(s3, s2, s1), H.h2(slot, s4)};
}

} // namespace detail

ValidationReport validate_psmod(const PseudoModification& A, Exec ex)
{
    const auto& a = A.dom;
    const auto& b = A.cod;
    check_parallel(a.dom, b.dom);
    check_parallel(a.cod, b.cod);
    if (!(a.dom == b.dom) || !(a.cod == b.cod))
        throw StructuralError("psmod between non-parallel transformations");
    const FiniteGrayCategory& C = A.source();
    const FiniteGrayCategory& H = A.target();
    check_sizes("psmod at0", A.at0, C.count(0), H.count(2));
    check_sizes("psmod at1", A.at1, C.count(1), H.count(3));

    ValidationReport out;
    const char* B = "psmod boundary";
    for (int x = 0; x < C.count(0); ++x) {
        ++out.instances[B];
        if (H.src(A.x(x)) != a.x(x) || H.tgt(A.x(x)) != b.x(x))
            out.add(B, {C.label(0, x)}, H.describe(a.x(x)) + " => " + H.describe(b.x(x)), H.describe(A.x(x)),
                    true);
    }
    if (out.has_structural())
        return out;
    for (int f = 0; f < C.count(1); ++f)
        check_boundary(out, B, H, [&] { return std::vector<std::string>{C.label(1, f)}; }, A.f(f),
                       [&] { return psmod_at1_boundary(A, f); });
    if (out.has_structural())
        return out;

    auto F = [&](int dim, int i) { return a.dom({dim, i}); };
    auto G = [&](int dim, int i) { return a.cod({dim, i}); };

    for (int x = 0; x < C.count(0); ++x)
        detail::expect_equal(
            out, "psmod unit", H, [&] { return std::vector<std::string>{C.label(0, x)}; },
            [&] { return std::pair{A.f(C.id(0, x)), H.id(A.x(x))}; });

    for_instances(out, ex, composable_pairs(C), [&](const Args& e, ValidationReport& r) {
        const auto [f2, f1, f21] = e;
        detail::expect_equal(
            r, "psmod cocycle compatibility", H,
            [&] { return std::vector<std::string>{C.label(1, f2), C.label(1, f1)}; },
            [&] { return detail::psmod_cocycle_sides(A, f2, f1, A.f(f21)); });
    });

    for_instances(out, ex, cells_of(C, 2), [&](const Args& e, ValidationReport& r) {
        const int phi = e[0];
        const int f = C.src(2, phi), f2 = C.tgt(2, phi);
        const int x = C.src(1, f), y = C.tgt(1, f);
        detail::expect_equal(
            r, "psmod 2-cell compatibility", H, [&] { return std::vector<std::string>{C.label(2, phi)}; }, [&] {
                Cell s1 = H.h1(H.h0(b.x(y), F(2, phi)), A.f(f));
                Cell s2 = H.h1(H.tens(A.x(y), F(2, phi)), a.f(f));
                Cell s3 = H.h1(H.h0(A.x(y), F(1, f2)), a.phi(phi));
                Cell s4 = H.h1(b.phi(phi), H.h0(G(1, f), A.x(x)));
                Cell s5 = H.h1(b.f(f2), H.inv(H.tens(G(2, phi), A.x(x))));
                Cell s6 = H.h1(A.f(f2), H.h0(G(2, phi), a.x(x)));
                return std::pair{H.h2(s3, s2, s1), H.h2(s6, s5, s4)};
            });
    });
    return out;
}

ValidationReport validate_perturbation(const Perturbation& P, Exec ex)
{
    const auto& A = P.dom;
    const auto& Bm = P.cod;
    if (!(A.dom == Bm.dom) || !(A.cod == Bm.cod))
        throw StructuralError("perturbation between non-parallel modifications");
    const FiniteGrayCategory& C = P.source();
    const FiniteGrayCategory& H = P.target();
    check_sizes("perturbation at0", P.at0, C.count(0), H.count(3));
    check_sizes("perturbation domain at0", A.at0, C.count(0), H.count(2));
    check_sizes("perturbation codomain at0", Bm.at0, C.count(0), H.count(2));

    ValidationReport out;
    const char* B = "perturbation boundary";
    for (int x = 0; x < C.count(0); ++x) {
        ++out.instances[B];
        if (H.src(P.x(x)) != A.x(x) || H.tgt(P.x(x)) != Bm.x(x))
            out.add(B, {C.label(0, x)}, H.describe(A.x(x)) + " => " + H.describe(Bm.x(x)), H.describe(P.x(x)),
                    true);
    }
    if (out.has_structural())
        return out;

    const auto& a = A.dom;
    const auto& b = A.cod;
    for_instances(out, ex, cells_of(C, 1), [&](const Args& e, ValidationReport& r) {
        const int f = e[0];
        const int x = C.src(1, f), y = C.tgt(1, f);
        detail::expect_equal(
            r, "perturbation square", H, [&] { return std::vector<std::string>{C.label(1, f)}; }, [&] {
                Cell lhs = H.h2(Bm.f(f), H.h1(b.f(f), H.h0(a.cod({1, f}), P.x(x))));
                Cell rhs = H.h2(H.h1(H.h0(P.x(y), a.dom({1, f})), a.f(f)), A.f(f));
                return std::pair{lhs, rhs};
            });
    });
    return out;
}

PseudoTransformation id_pstransf(const GrayFunctor& F)
{
    const auto& C = *F.dom;
    const auto& H = *F.cod;
    const int n1 = C.count(1);
    PseudoTransformation t{F, F, {}, {}, {}, std::vector<int>(static_cast<std::size_t>(n1) * n1, -1)};
    for (int x = 0; x < C.count(0); ++x)
        t.at0.push_back(H.id(0, F.map[0][x]));
    for (int f = 0; f < n1; ++f)
        t.at1.push_back(H.id(1, F.map[1][f]));
    for (int p = 0; p < C.count(2); ++p)
        t.at2.push_back(H.id(2, F.map[2][p]));
    for (const auto& e : C.table(Op::comp0).entries())
        t.coc[static_cast<std::size_t>(e.a) * n1 + e.b] = H.id(2, H.id(1, F.map[1][e.c]));
    return t;
}

PseudoModification id_psmod(const PseudoTransformation& a)
{
    const auto& C = a.source();
    const auto& H = a.target();
    PseudoModification m{a, a, {}, {}};
    for (int x = 0; x < C.count(0); ++x)
        m.at0.push_back(H.id(1, a.at0[x]));
    for (int f = 0; f < C.count(1); ++f)
        m.at1.push_back(H.id(2, a.at1[f]));
    return m;
}

Perturbation id_pert(const PseudoModification& A)
{
    const auto& C = A.source();
    const auto& H = A.target();
    Perturbation p{A, A, {}};
    for (int x = 0; x < C.count(0); ++x)
        p.at0.push_back(H.id(2, A.at0[x]));
    return p;
}

namespace {

std::vector<int> with_boundary(const FiniteGrayCategory& H, int dim, Cell s, Cell t, bool invertible)
{
    std::vector<int> out;
    for (int j : H.with_src(dim, s.idx))
        if (H.tgt(dim, j) == t.idx && (!invertible || H.inverse(dim, j)))
            out.push_back(j);
    return out;
}

template <typename Boundary>
std::vector<int> forced(const FiniteGrayCategory& H, int dim, bool invertible, Boundary&& boundary)
{
    try {
        auto [s, t] = boundary();
        return with_boundary(H, dim, s, t, invertible);
    } catch (const TypingError&) {
        return {};
    } catch (const ClosureError&) {
        return {};
    }
}

} // namespace

std::vector<PseudoTransformation> enumerate_pstransf(const GrayFunctor& F, const GrayFunctor& G)
{
    check_parallel(F, G);
    const auto& C = *F.dom;
    const auto& H = *F.cod;
    const int n1 = C.count(1);
    PseudoTransformation t{F, G, std::vector<int>(C.count(0), -1), std::vector<int>(n1, -1),
                           std::vector<int>(C.count(2), -1),
                           std::vector<int>(static_cast<std::size_t>(n1) * n1, -1)};

    std::vector<detail::Slot> slots;
    for (int x = 0; x < C.count(0); ++x)
        slots.push_back({&t.at0[x], detail::max_parallel(H, 1), false, [&, x] {
                             std::vector<int> out;
                             for (int j : H.with_src(1, F.map[0][x]))
                                 if (H.tgt(1, j) == G.map[0][x])
                                     out.push_back(j);
                             return out;
                         }});
    for (int f = 0; f < n1; ++f) {
        const bool ident = C.is_identity(1, f);
        slots.push_back({&t.at1[f], detail::max_parallel(H, 2), ident, [&, f, ident]() -> std::vector<int> {
                             if (ident)
                                 return {H.id(1, t.at0[C.src(1, f)])};
                             return forced(H, 2, true, [&] { return at1_boundary(t, f); });
                         }});
    }
    for (int p = 0; p < C.count(2); ++p) {
        const bool ident = C.is_identity(2, p);
        slots.push_back({&t.at2[p], detail::max_parallel(H, 3), ident, [&, p, ident]() -> std::vector<int> {
                             if (ident)
                                 return {H.id(2, t.at1[C.src(2, p)])};
                             return forced(H, 3, true, [&] { return at2_boundary(t, p); });
                         }});
    }
    for (const auto& e : C.table(Op::comp0).entries()) {
        const int f2 = e.a, f1 = e.b;
        const bool ident = C.is_identity(1, f2) || C.is_identity(1, f1);
        int* slot = &t.coc[static_cast<std::size_t>(f2) * n1 + f1];
        slots.push_back({slot, detail::max_parallel(H, 3), ident, [&, f2, f1, ident]() -> std::vector<int> {
                             if (ident)
                                 return {H.id(2, t.at1[C.is_identity(1, f2) ? f1 : f2])};
                             return forced(H, 3, true, [&] { return coc_boundary(t, f2, f1); });
                         }});
    }
    return detail::enumerate(slots, t, "enumerate_pstransf",
                             [](const PseudoTransformation& c) { return validate_pstransf(c, Exec::serial).ok(); });
}

std::vector<PseudoModification> enumerate_psmod(const PseudoTransformation& a, const PseudoTransformation& b)
{
    check_parallel(a.dom, b.dom);
    if (!(a.dom == b.dom) || !(a.cod == b.cod))
        throw StructuralError("enumerate_psmod: transformations are not parallel");
    const auto& C = a.source();
    const auto& H = a.target();
    PseudoModification m{a, b, std::vector<int>(C.count(0), -1), std::vector<int>(C.count(1), -1)};

    std::vector<detail::Slot> slots;
    for (int x = 0; x < C.count(0); ++x)
        slots.push_back({&m.at0[x], detail::max_parallel(H, 2), false,
                         [&, x] { return with_boundary(H, 2, a.x(x), b.x(x), false); }});
    for (int f = 0; f < C.count(1); ++f) {
        const bool ident = C.is_identity(1, f);
        slots.push_back({&m.at1[f], detail::max_parallel(H, 3), ident, [&, f, ident]() -> std::vector<int> {
                             if (ident)
                                 return {H.id(2, m.at0[C.src(1, f)])};
                             return forced(H, 3, false, [&] { return psmod_at1_boundary(m, f); });
                         }});
    }
    return detail::enumerate(slots, m, "enumerate_psmod",
                             [](const PseudoModification& c) { return validate_psmod(c, Exec::serial).ok(); });
}

std::vector<Perturbation> enumerate_pert(const PseudoModification& A, const PseudoModification& B)
{
    if (!(A.dom == B.dom) || !(A.cod == B.cod))
        throw StructuralError("enumerate_pert: modifications are not parallel");
    const auto& C = A.source();
    const auto& H = A.target();
    Perturbation p{A, B, std::vector<int>(C.count(0), -1)};
    std::vector<detail::Slot> slots;
    for (int x = 0; x < C.count(0); ++x)
        slots.push_back({&p.at0[x], detail::max_parallel(H, 3), false,
                         [&, x] { return with_boundary(H, 3, A.x(x), B.x(x), false); }});
    return detail::enumerate(slots, p, "enumerate_pert",
                             [](const Perturbation& c) { return validate_perturbation(c, Exec::serial).ok(); });
}

} // namespace graycat
