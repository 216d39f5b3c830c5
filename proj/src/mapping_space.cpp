#include "graycat/mapping_space.hpp"

#include "compare.hpp"
#include "parallel.hpp"

#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graycat {

namespace {

void append(std::vector<int>& k, const std::vector<int>& v) { k.insert(k.end(), v.begin(), v.end()); }

int lookup(const std::map<std::vector<int>, int>& m, const std::vector<int>& k)
{
    auto it = m.find(k);
    return it == m.end() ? -1 : it->second;
}

std::vector<int> key_of(const GrayFunctor& F)
{
    std::vector<int> k;
    for (const auto& m : F.map)
        append(k, m);
    return k;
}

} // namespace

int MappingSpace::find(const GrayFunctor& F) const
{
    if (F.dom.get() != dom.get() || F.cod.get() != cod.get())
        return -1;
    return lookup(index[0], key_of(F));
}

int MappingSpace::find(const PseudoTransformation& a) const
{
    std::vector<int> k{find(a.dom), find(a.cod)};
    if (k[0] < 0 || k[1] < 0)
        return -1;
    append(k, a.at0);
    append(k, a.at1);
    append(k, a.at2);
    append(k, a.coc);
    return lookup(index[1], k);
}

int MappingSpace::find(const PseudoModification& A) const
{
    std::vector<int> k{find(A.dom), find(A.cod)};
    if (k[0] < 0 || k[1] < 0)
        return -1;
    append(k, A.at0);
    append(k, A.at1);
    return lookup(index[2], k);
}

int MappingSpace::find(const Perturbation& P) const
{
    std::vector<int> k{find(P.dom), find(P.cod)};
    if (k[0] < 0 || k[1] < 0)
        return -1;
    append(k, P.at0);
    return lookup(index[3], k);
}

int MappingSpace::find(const HCell& x) const
{
    return std::visit([&](const auto& v) { return find(v); }, x.v);
}

int MappingSpace::at(const HCell& x, const std::string& what) const
{
    int i = find(x);
    if (i < 0)
        throw ClosureError(what + ": no " + kind_name(x.rank()) + " of " + space->name() + " has these components");
    return i;
}

HCell MappingSpace::value(Cell c) const
{
    switch (c.dim) {
    case 0: return {functors.at(c.idx)};
    case 1: return {transfs.at(c.idx)};
    case 2: return {mods.at(c.idx)};
    default: return {perts.at(c.idx)};
    }
}

namespace {

// Fills op's table for every compatible pair; compute returns the result
// value, which must already be a cell of the space.
template <typename Compute>
void fill(FiniteGrayCategory& S, const MappingSpace& M, Op op, Compute&& compute)
{
    const OpShape& s = op_shape(op);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < S.count(s.left); ++a)
        for (int b = 0; b < S.count(s.right); ++b)
            if (S.compatible(op, a, b))
                pairs.emplace_back(a, b);
    const long n = static_cast<long>(pairs.size());
    std::vector<int> result(pairs.size(), -1);
    std::vector<std::string> error(pairs.size());
#ifdef _OPENMP
    int nt = jobs() > 0 ? jobs() : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt) if (n >= 64)
#endif
    for (long i = 0; i < n; ++i) {
        try {
            result[i] = M.find(compute(pairs[i].first, pairs[i].second));
            if (result[i] < 0)
                error[i] = "result is not a cell of the space";
        } catch (const std::exception& e) {
            error[i] = e.what();
        }
    }
    for (long i = 0; i < n; ++i) {
        auto [a, b] = pairs[i];
        if (result[i] < 0)
            throw ClosureError(S.name() + ": " + s.name + "(" + S.label(s.left, a) + ", " + S.label(s.right, b) +
                               "): " + error[i]);
        S.set(op, a, b, result[i]);
    }
}

} // namespace

MappingSpace build_mapping_space(const CatPtr& G, const CatPtr& H)
{
    MappingSpace M;
    M.dom = G;
    M.cod = H;
    M.functors = enumerate_functors(G, H);
    for (const auto& F : M.functors)
        for (const auto& F2 : M.functors)
            for (auto& t : enumerate_pstransf(F, F2))
                M.transfs.push_back(std::move(t));

    // Indexes are needed before the higher cells can be keyed.
    for (std::size_t i = 0; i < M.functors.size(); ++i)
        M.index[0][key_of(M.functors[i])] = static_cast<int>(i);
    auto index_all = [&](int dim, const auto& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::vector<int> k{M.find(values[i].dom), M.find(values[i].cod)};
            const auto& v = values[i];
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PseudoTransformation>) {
                append(k, v.at0);
                append(k, v.at1);
                append(k, v.at2);
                append(k, v.coc);
            } else if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PseudoModification>) {
                append(k, v.at0);
                append(k, v.at1);
            } else {
                append(k, v.at0);
            }
            M.index[dim][k] = static_cast<int>(i);
        }
    };
    index_all(1, M.transfs);

    const auto parallel_pairs = [](const auto& values, auto&& body) {
        for (const auto& a : values)
            for (const auto& b : values)
                if (a.dom == b.dom && a.cod == b.cod)
                    body(a, b);
    };
    parallel_pairs(M.transfs, [&](const auto& a, const auto& b) {
        for (auto& m : enumerate_psmod(a, b))
            M.mods.push_back(std::move(m));
    });
    index_all(2, M.mods);
    parallel_pairs(M.mods, [&](const auto& a, const auto& b) {
        for (auto& p : enumerate_pert(a, b))
            M.perts.push_back(std::move(p));
    });
    index_all(3, M.perts);

    const double work = static_cast<double>(M.perts.size()) * static_cast<double>(M.perts.size());
    if (work > static_cast<double>(size_bound()))
        throw SizeBoundError("build_mapping_space: table size exceeds the bound " + std::to_string(size_bound()));

    auto S = std::make_shared<FiniteGrayCategory>("[" + G->name() + "," + H->name() + "]");
    for (std::size_t i = 0; i < M.functors.size(); ++i)
        S->add_cell(0, "F" + std::to_string(i));
    for (std::size_t i = 0; i < M.transfs.size(); ++i)
        S->add_cell(1, "t" + std::to_string(i), M.find(M.transfs[i].dom), M.find(M.transfs[i].cod));
    for (std::size_t i = 0; i < M.mods.size(); ++i)
        S->add_cell(2, "m" + std::to_string(i), M.find(M.mods[i].dom), M.find(M.mods[i].cod));
    for (std::size_t i = 0; i < M.perts.size(); ++i)
        S->add_cell(3, "p" + std::to_string(i), M.find(M.perts[i].dom), M.find(M.perts[i].cod));

    auto must = [&](int i, const char* what) {
        if (i < 0)
            throw ClosureError(std::string("build_mapping_space: ") + what + " is not enumerated");
        return i;
    };
    for (std::size_t i = 0; i < M.functors.size(); ++i)
        S->set_identity(0, static_cast<int>(i), must(M.find(id_pstransf(M.functors[i])), "identity transformation"));
    for (std::size_t i = 0; i < M.transfs.size(); ++i)
        S->set_identity(1, static_cast<int>(i), must(M.find(id_psmod(M.transfs[i])), "identity modification"));
    for (std::size_t i = 0; i < M.mods.size(); ++i)
        S->set_identity(2, static_cast<int>(i), must(M.find(id_pert(M.mods[i])), "identity perturbation"));
    S->finalize();

    const auto& T = M.transfs;
    const auto& Md = M.mods;
    const auto& P = M.perts;
    fill(*S, M, Op::comp0, [&](int a, int b) { return HCell{comp0_pstransf(T[a], T[b])}; });
    fill(*S, M, Op::whisk_1on2, [&](int a, int b) { return HCell{whiskr_psmod(T[a], Md[b])}; });
    fill(*S, M, Op::whisk_2on1, [&](int a, int b) { return HCell{whiskl_psmod(Md[a], T[b])}; });
    fill(*S, M, Op::whisk_1on3, [&](int a, int b) { return HCell{whisk_pert(T[a], P[b])}; });
    fill(*S, M, Op::whisk_3on1, [&](int a, int b) { return HCell{whisk_pert(P[a], T[b])}; });
    fill(*S, M, Op::comp1, [&](int a, int b) { return HCell{comp1_psmod(Md[a], Md[b])}; });
    fill(*S, M, Op::whisk_2on3, [&](int a, int b) { return HCell{whisk_pert(Md[a], P[b])}; });
    fill(*S, M, Op::whisk_3on2, [&](int a, int b) { return HCell{whisk_pert(P[a], Md[b])}; });
    fill(*S, M, Op::comp2, [&](int a, int b) { return HCell{comp2_pert(P[a], P[b])}; });

    // (B (x) A)_x = B_x (x) A_x, from (beta' *0 A) *1 (B *0 alpha) to (B *0 alpha') *1 (beta *0 A).
    const auto& K = *H;
    fill(*S, M, Op::tensor, [&](int b, int a) {
        const auto& B = Md[b];
        const auto& A = Md[a];
        Perturbation t{comp1_psmod(whiskr_psmod(B.cod, A), whiskl_psmod(B, A.dom)),
                       comp1_psmod(whiskl_psmod(B, A.cod), whiskr_psmod(B.dom, A)),
                       {}};
        for (int x = 0; x < G->count(0); ++x)
            t.at0.push_back(K.tens(B.x(x), A.x(x)).idx);
        return HCell{std::move(t)};
    });
    for (const auto& e : S->table(Op::tensor).entries()) {
        int same = 0;
        for (int j : S->with_src(3, S->src(3, e.c)))
            same += S->tgt(3, j) == S->tgt(3, e.c);
        M.tensor_multiplicity = std::max(M.tensor_multiplicity, same);
    }
    S->finalize();
    M.space = S;
    return M;
}

ValidationReport check_dictionary(const MappingSpace& M)
{
    const auto& S = *M.space;
    ValidationReport out;
    for (int d = 0; d < 4; ++d)
        out.merge(detail::run_instances(Exec::parallel, S.count(d), [&](long i, ValidationReport& r) {
            HCell v = M.value({d, static_cast<int>(i)});
            ValidationReport sub = validate(v, Exec::serial);
            ++r.instances["dictionary value"];
            if (!sub.ok())
                r.add("dictionary value", {S.label(d, static_cast<int>(i))}, "valid " + std::string(kind_name(d)),
                      sub.violations[0].axiom);
            if (d >= 1) {
                ++r.instances["dictionary boundary"];
                HCell low = v.lower();
                if (M.find(low) != S.src(d, static_cast<int>(i)))
                    r.add("dictionary boundary", {S.label(d, static_cast<int>(i))}, "source in dictionary",
                          "mismatch");
            }
        }));
    auto recheck = [&](Op op, auto&& compute) {
        const OpShape& s = op_shape(op);
        const auto entries = S.table(op).entries();
        const std::string axiom = std::string("dictionary ") + s.name;
        out.merge(detail::run_instances(Exec::parallel, static_cast<long>(entries.size()),
                                        [&](long i, ValidationReport& r) {
                                            const auto& e = entries[i];
                                            ++r.instances[axiom];
                                            int want = -1;
                                            try {
                                                want = M.find(compute(e.a, e.b));
                                            } catch (const std::exception&) {
                                            }
                                            if (want != e.c)
                                                r.add(axiom, {S.label(s.left, e.a), S.label(s.right, e.b)},
                                                      want < 0 ? "none" : S.label(s.result, want),
                                                      S.label(s.result, e.c));
                                        }));
    };
    const auto& T = M.transfs;
    const auto& Md = M.mods;
    const auto& P = M.perts;
    recheck(Op::comp0, [&](int a, int b) { return HCell{comp0_pstransf(T[a], T[b])}; });
    recheck(Op::whisk_1on2, [&](int a, int b) { return HCell{whiskr_psmod(T[a], Md[b])}; });
    recheck(Op::whisk_2on1, [&](int a, int b) { return HCell{whiskl_psmod(Md[a], T[b])}; });
    recheck(Op::whisk_1on3, [&](int a, int b) { return HCell{whisk_pert(T[a], P[b])}; });
    recheck(Op::whisk_3on1, [&](int a, int b) { return HCell{whisk_pert(P[a], T[b])}; });
    recheck(Op::comp1, [&](int a, int b) { return HCell{comp1_psmod(Md[a], Md[b])}; });
    recheck(Op::whisk_2on3, [&](int a, int b) { return HCell{whisk_pert(Md[a], P[b])}; });
    recheck(Op::whisk_3on2, [&](int a, int b) { return HCell{whisk_pert(P[a], Md[b])}; });
    recheck(Op::comp2, [&](int a, int b) { return HCell{comp2_pert(P[a], P[b])}; });
    return out;
}

namespace {

template <typename Act>
GrayFunctor act_on_space(const MappingSpace& from, const MappingSpace& to, const char* what, Act&& act)
{
    GrayFunctor out{from.space, to.space, {}};
    for (int d = 0; d < 4; ++d)
        for (int i = 0; i < from.space->count(d); ++i)
            out.map[d].push_back(to.at(act(from.value({d, i})), what));
    return out;
}

} // namespace

GrayFunctor postcompose_map(const GrayFunctor& K, const MappingSpace& from, const MappingSpace& to)
{
    return act_on_space(from, to, "postcompose_map", [&](const HCell& x) { return hcomp(HCell{K}, x); });
}

GrayFunctor precompose_map(const GrayFunctor& F, const MappingSpace& from, const MappingSpace& to)
{
    return act_on_space(from, to, "precompose_map", [&](const HCell& x) { return hcomp(x, HCell{F}); });
}

Perturbation L_cocycle(const PseudoTransformation& b, const PseudoTransformation& a2,
                       const PseudoTransformation& a1)
{
    const GrayFunctor& H = b.dom;
    const GrayFunctor& H2 = b.cod;
    Perturbation p{comp1_psmod(whiskl_psmod(hcomp(b, a2), hcomp(H, a1)), whiskr_psmod(hcomp(H2, a2), hcomp(b, a1))),
                   hcomp(b, comp0_pstransf(a2, a1)),
                   {}};
    for (std::size_t x = 0; x < a1.at0.size(); ++x)
        p.at0.push_back(b.c(a2.at0[x], a1.at0[x]).idx);
    return p;
}

namespace {

GrayFunctor L_functor(const GrayFunctor& H, const MappingSpace& X, const MappingSpace& Y)
{
    return act_on_space(X, Y, "L", [&](const HCell& x) { return hcomp(HCell{H}, x); });
}

PseudoTransformation L_transformation(const PseudoTransformation& b, const MappingSpace& X, const MappingSpace& Y)
{
    const auto& S = *X.space;
    const int n1 = S.count(1);
    PseudoTransformation t{L_functor(b.dom, X, Y), L_functor(b.cod, X, Y), {}, {}, {},
                           std::vector<int>(static_cast<std::size_t>(n1) * n1, -1)};
    for (const auto& G : X.functors)
        t.at0.push_back(Y.at(HCell{hcomp(b, G)}, "L(beta)_G"));
    for (const auto& a : X.transfs)
        t.at1.push_back(Y.at(HCell{hcomp(b, a)}, "L(beta)_alpha"));
    for (const auto& A : X.mods)
        t.at2.push_back(Y.at(HCell{hcomp(b, A)}, "L(beta)_A"));
    for (const auto& e : S.table(Op::comp0).entries())
        t.coc[static_cast<std::size_t>(e.a) * n1 + e.b] =
            Y.at(HCell{L_cocycle(b, X.transfs[e.a], X.transfs[e.b])}, "L(beta)^2");
    return t;
}

PseudoModification L_modification(const PseudoModification& B, const MappingSpace& X, const MappingSpace& Y)
{
    PseudoModification m{L_transformation(B.dom, X, Y), L_transformation(B.cod, X, Y), {}, {}};
    for (const auto& G : X.functors)
        m.at0.push_back(Y.at(HCell{hcomp(B, G)}, "L(B)_G"));
    for (const auto& a : X.transfs)
        m.at1.push_back(Y.at(HCell{hcomp(B, a)}, "L(B)_alpha"));
    return m;
}

} // namespace

HCell L_map(const HCell& x, const MappingSpace& X, const MappingSpace& Y)
{
    switch (x.rank()) {
    case 0: return {L_functor(std::get<0>(x.v), X, Y)};
    case 1: return {L_transformation(std::get<1>(x.v), X, Y)};
    case 2: return {L_modification(std::get<2>(x.v), X, Y)};
    default: {
        const auto& D = std::get<3>(x.v);
        Perturbation p{L_modification(D.dom, X, Y), L_modification(D.cod, X, Y), {}};
        for (const auto& G : X.functors)
            p.at0.push_back(Y.at(HCell{hcomp(D, G)}, "L(Delta)_G"));
        return {std::move(p)};
    }
    }
}

ValidationReport check_L_welldef(const MappingSpace& Z, const MappingSpace& X, const MappingSpace& Y)
{
    ValidationReport out;
    const auto& S = *Z.space;
    for (int d = 0; d < 4; ++d)
        for (int i = 0; i < S.count(d); ++i) {
            const std::string label = S.label(d, i);
            const std::string axiom = std::string("L image is a ") + kind_name(d);
            ++out.instances[axiom];
            detail::guarded(out, axiom, [&] {
                HCell img = L_map(Z.value({d, i}), X, Y);
                ValidationReport r = validate(img);
                for (auto v : r.violations) {
                    v.axiom = axiom + ": " + v.axiom;
                    v.witness.insert(v.witness.begin(), label);
                    out.violations.push_back(std::move(v));
                }
                for (const auto& [k, n] : r.instances)
                    out.instances["L image: " + k] += n;
            });
        }
    const auto& XS = *X.space;
    for (const auto& b : Z.transfs)
        for (const auto& e : XS.table(Op::comp0).entries()) {
            const char* axiom = "L(beta)^2 is a perturbation";
            ++out.instances[axiom];
            detail::guarded(out, axiom, [&] {
                ValidationReport r = validate_perturbation(L_cocycle(b, X.transfs[e.a], X.transfs[e.b]));
                for (auto v : r.violations) {
                    v.axiom = std::string(axiom) + ": " + v.axiom;
                    v.witness.insert(v.witness.begin(), XS.label(1, e.b));
                    v.witness.insert(v.witness.begin(), XS.label(1, e.a));
                    out.violations.push_back(std::move(v));
                }
            });
        }
    return out;
}

ValidationReport check_L_homomorphism(const PseudoTransformation& b2, const PseudoTransformation& b1,
                                      const MappingSpace& X, const MappingSpace& Y)
{
    ValidationReport r;
    detail::guarded(r, "L homomorphism", [&] {
        const auto lhs = comp0_pstransf(std::get<1>(L_map(HCell{b2}, X, Y).v), std::get<1>(L_map(HCell{b1}, X, Y).v));
        const auto rhs = std::get<1>(L_map(HCell{comp0_pstransf(b2, b1)}, X, Y).v);
        detail::compare(r, "L homomorphism", "L(beta')*0L(beta)", lhs, rhs);
    });
    return r;
}

GrayFunctor eval_i(const MappingSpace& M)
{
    if (M.dom->count(0) != 1)
        throw std::invalid_argument("eval_i: the domain must have exactly one object");
    GrayFunctor out{M.space, M.cod, {}};
    for (const auto& F : M.functors)
        out.map[0].push_back(F.map[0][0]);
    for (const auto& a : M.transfs)
        out.map[1].push_back(a.at0[0]);
    for (const auto& A : M.mods)
        out.map[2].push_back(A.at0[0]);
    for (const auto& P : M.perts)
        out.map[3].push_back(P.at0[0]);
    return out;
}

int unit_j(const MappingSpace& M)
{
    if (M.dom.get() != M.cod.get())
        throw std::invalid_argument("unit_j: needs an endo mapping space");
    int i = M.find(identity_functor(M.dom));
    if (i < 0)
        throw ClosureError("unit_j: the identity functor is not a cell of " + M.space->name());
    return i;
}

ValidationReport check_i_naturality(const GrayFunctor& K, const MappingSpace& from, const MappingSpace& to)
{
    ValidationReport r;
    detail::guarded(r, "i naturality", [&] {
        GrayFunctor iH = eval_i(from), iH2 = eval_i(to);
        r.merge(validate_functor(iH), "i_H: ");
        r.merge(validate_functor(iH2), "i_H': ");
        GrayFunctor lhs = compose_functors(iH2, postcompose_map(K, from, to));
        GrayFunctor rhs = compose_functors(K, iH);
        for (int d = 0; d < 4; ++d)
            detail::compare_vec(r, "i naturality", "map" + std::to_string(d), lhs.map[d], rhs.map[d], *to.cod, d);
    });
    return r;
}

ValidationReport check_j_extranaturality(const GrayFunctor& F, const MappingSpace& GG, const MappingSpace& G2G2,
                                         const MappingSpace& GG2)
{
    ValidationReport r;
    detail::guarded(r, "j extranaturality", [&] {
        const int lhs = postcompose_map(F, GG, GG2).map[0][unit_j(GG)];
        const int rhs = precompose_map(F, G2G2, GG2).map[0][unit_j(G2G2)];
        const auto& S = *GG2.space;
        ++r.instances["j extranaturality"];
        if (lhs != rhs)
            r.add("j extranaturality", {S.label(0, lhs), S.label(0, rhs)}, S.label(0, rhs), S.label(0, lhs));
        ++r.instances["j extranaturality"];
        if (lhs != GG2.find(F))
            r.add("j extranaturality", {S.label(0, lhs)}, "the cell of F", S.label(0, lhs));
    });
    return r;
}

} // namespace graycat
