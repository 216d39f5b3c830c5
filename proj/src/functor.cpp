#include "graycat/functor.hpp"

#include "check.hpp"
#include "enumerate.hpp"
#include "parallel.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>

namespace graycat {

namespace {

std::uint64_t g_bound = 0;

std::uint64_t default_bound()
{
    if (const char* env = std::getenv("GRAYCAT_SIZE_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0)
            return v;
    }
    return 1000000ULL;
}

void check_total(const GrayFunctor& F)
{
    if (!F.dom || !F.cod)
        throw StructuralError("functor without domain or codomain");
    for (int d = 0; d < 4; ++d) {
        if (static_cast<int>(F.map[d].size()) != F.dom->count(d))
            throw StructuralError("functor map" + std::to_string(d) + " is not total");
        for (int v : F.map[d])
            if (v < 0 || v >= F.cod->count(d))
                throw StructuralError("functor map" + std::to_string(d) + " has a dangling value");
    }
}

} // namespace

std::uint64_t size_bound()
{
    if (g_bound == 0)
        g_bound = default_bound();
    return g_bound;
}

void set_size_bound(std::uint64_t b) { g_bound = b; }

ValidationReport validate_functor(const GrayFunctor& F, Exec ex)
{
    check_total(F);
    const FiniteGrayCategory& G = *F.dom;
    const FiniteGrayCategory& H = *F.cod;
    ValidationReport out;

    for (int d = 1; d <= 3; ++d)
        for (int i = 0; i < G.count(d); ++i) {
            Cell c{d, i};
            ++out.instances["functor boundary"];
            if (F(G.src(c)) != H.src(F(c)) || F(G.tgt(c)) != H.tgt(F(c)))
                out.add("functor boundary", {G.label(c)}, "boundary preserved", H.label(F(c)), true);
        }
    if (out.has_structural())
        return out;

    for (int d = 0; d <= 2; ++d)
        for (int i = 0; i < G.count(d); ++i) {
            Cell c{d, i};
            detail::expect_equal(
                out, "functor unit", H, [&] { return std::vector<std::string>{G.label(c)}; },
                [&] { return std::pair{F(G.id(c)), H.id(F(c))}; });
        }

    for (Op op : all_ops()) {
        const OpShape& s = op_shape(op);
        const std::string axiom = std::string("functor ") + s.name;
        const auto entries = G.table(op).entries();
        out.merge(detail::run_instances(ex, static_cast<long>(entries.size()), [&](long i, ValidationReport& r) {
            const auto& e = entries[i];
            Cell a{s.left, e.a}, b{s.right, e.b}, c{s.result, e.c};
            detail::expect_equal(
                r, axiom.c_str(), H, [&] { return std::vector<std::string>{G.label(a), G.label(b)}; },
                [&] { return std::pair{F(c), Cell{s.result, H.apply(op, F(a).idx, F(b).idx)}}; });
        }));
    }
    return out;
}

GrayFunctor compose_functors(const GrayFunctor& G, const GrayFunctor& F)
{
    if (F.cod.get() != G.dom.get())
        throw TypingError("compose_functors: codomain of the first functor is not the domain of the second");
    GrayFunctor out{F.dom, G.cod, {}};
    for (int d = 0; d < 4; ++d) {
        out.map[d].resize(F.map[d].size());
        for (std::size_t i = 0; i < F.map[d].size(); ++i)
            out.map[d][i] = G.map[d].at(F.map[d][i]);
    }
    return out;
}

GrayFunctor identity_functor(const CatPtr& C)
{
    GrayFunctor out{C, C, {}};
    for (int d = 0; d < 4; ++d) {
        out.map[d].resize(C->count(d));
        for (int i = 0; i < C->count(d); ++i)
            out.map[d][i] = i;
    }
    return out;
}

std::vector<GrayFunctor> enumerate_functors(const CatPtr& Gp, const CatPtr& Hp)
{
    const FiniteGrayCategory& G = *Gp;
    const FiniteGrayCategory& H = *Hp;

    std::vector<Cell> order;
    for (int d = 0; d < 4; ++d)
        for (int i = 0; i < G.count(d); ++i)
            order.push_back({d, i});

    double log_size = 0;
    for (Cell c : order)
        if (!G.is_identity(c.dim, c.idx))
            log_size += std::log(static_cast<double>(std::max(1, detail::max_parallel(H, c.dim))));
    if (log_size > std::log(static_cast<double>(size_bound())) + 1e-9)
        throw SizeBoundError("enumerate_functors " + G.name() + " -> " + H.name() +
                             ": search size exceeds the bound");

    std::array<std::vector<int>, 4> pos;
    for (int d = 0; d < 4; ++d)
        pos[d].assign(G.count(d), 0);
    for (std::size_t k = 0; k < order.size(); ++k)
        pos[order[k].dim][order[k].idx] = static_cast<int>(k);

    // Each table entry is checked as soon as its last cell is assigned.
    struct Constraint {
        int op;
        int a, b, c;
    };
    std::vector<std::vector<Constraint>> at(order.size());
    for (Op op : all_ops()) {
        const OpShape& s = op_shape(op);
        for (const auto& e : G.table(op).entries()) {
            int k = std::max({pos[s.left][e.a], pos[s.right][e.b], pos[s.result][e.c]});
            at[k].push_back({static_cast<int>(op), e.a, e.b, e.c});
        }
    }

    GrayFunctor F{Gp, Hp, {}};
    for (int d = 0; d < 4; ++d)
        F.map[d].assign(G.count(d), -1);

    // identity_of[d][i] is the (d-1)-cell whose identity is cell i, or -1.
    std::array<std::vector<int>, 4> identity_of;
    for (int d = 1; d < 4; ++d) {
        identity_of[d].assign(G.count(d), -1);
        for (int i = 0; i < G.count(d - 1); ++i)
            if (G.identity_entry(d - 1, i) >= 0)
                identity_of[d][G.identity_entry(d - 1, i)] = i;
    }

    std::vector<GrayFunctor> out;
    std::function<void(std::size_t)> dfs = [&](std::size_t k) {
        if (k == order.size()) {
            out.push_back(F);
            return;
        }
        const Cell c = order[k];
        std::vector<int> cands;
        if (c.dim > 0 && identity_of[c.dim][c.idx] >= 0) {
            int e = H.identity_entry(c.dim - 1, F.map[c.dim - 1][identity_of[c.dim][c.idx]]);
            if (e >= 0)
                cands.push_back(e);
        } else if (c.dim == 0) {
            for (int j = 0; j < H.count(0); ++j)
                cands.push_back(j);
        } else {
            const int s = F.map[c.dim - 1][G.src(c.dim, c.idx)];
            const int t = F.map[c.dim - 1][G.tgt(c.dim, c.idx)];
            for (int j : H.with_src(c.dim, s))
                if (H.tgt(c.dim, j) == t)
                    cands.push_back(j);
        }
        for (int v : cands) {
            F.map[c.dim][c.idx] = v;
            bool good = true;
            for (const auto& con : at[k]) {
                const OpShape& s = op_shape(static_cast<Op>(con.op));
                int fa = F.map[s.left][con.a], fb = F.map[s.right][con.b], fc = F.map[s.result][con.c];
                if (H.lookup(static_cast<Op>(con.op), fa, fb) != fc) {
                    good = false;
                    break;
                }
            }
            if (good)
                dfs(k + 1);
        }
        F.map[c.dim][c.idx] = -1;
    };
    dfs(0);
    return out;
}

} // namespace graycat
