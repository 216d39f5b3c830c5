#include "graycat/sweep.hpp"

#include "compare.hpp"
#include "parallel.hpp"

#include <sstream>

namespace graycat {

namespace {

void absorb(ValidationReport& into, ValidationReport&& part, const std::vector<std::string>& where)
{
    for (auto& v : part.violations) {
        v.witness.insert(v.witness.begin(), where.begin(), where.end());
        into.violations.push_back(std::move(v));
    }
    for (const auto& [k, n] : part.instances)
        into.instances[k] += n;
}

std::string label(const MappingSpace& M, int dim, int i) { return M.space->label(dim, i); }

} // namespace

ValidationReport sweep_pasteunit(const MappingSpace& GH, const MappingSpace& HK, Exec ex)
{
    const long nb = static_cast<long>(HK.transfs.size());
    const long ng = static_cast<long>(GH.functors.size());
    return detail::run_instances(ex, nb * ng, [&](long i, ValidationReport& r) {
        const int b = static_cast<int>(i / ng), g = static_cast<int>(i % ng);
        absorb(r, check_pasteunit(HK.transfs[b], GH.functors[g]), {label(HK, 1, b), label(GH, 0, g)});
    });
}

ValidationReport sweep_interchange(const MappingSpace& GH, const MappingSpace& HK, Exec ex)
{
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : HK.space->table(Op::comp0).entries())
        pairs.emplace_back(e.a, e.b);
    const long na = static_cast<long>(GH.transfs.size());
    return detail::run_instances(ex, static_cast<long>(pairs.size()) * na, [&](long i, ValidationReport& r) {
        auto [b2, b1] = pairs[static_cast<std::size_t>(i / na)];
        const int a = static_cast<int>(i % na);
        absorb(r, check_interchange(HK.transfs[b2], HK.transfs[b1], GH.transfs[a]),
               {label(HK, 1, b2), label(HK, 1, b1), label(GH, 1, a)});
    });
}

namespace {

struct CellPair {
    Cell x, y;
};

std::vector<CellPair> all_pairs(const MappingSpace& GH, const MappingSpace& HK)
{
    std::vector<CellPair> out;
    for (int dx = 0; dx < 4; ++dx)
        for (int dy = 0; dy < 4; ++dy)
            for (int i = 0; i < HK.space->count(dx); ++i)
                for (int j = 0; j < GH.space->count(dy); ++j)
                    out.push_back({{dx, i}, {dy, j}});
    return out;
}

} // namespace

ValidationReport sweep_hcomp_typing(const MappingSpace& GH, const MappingSpace& HK, Exec ex)
{
    const auto pairs = all_pairs(GH, HK);
    ValidationReport out = detail::run_instances(ex, static_cast<long>(pairs.size()), [&](long i, ValidationReport& r) {
        const auto& p = pairs[static_cast<std::size_t>(i)];
        ++r.instances[std::string("case ") + kind_name(p.x.dim) + "*" + kind_name(p.y.dim)];
        absorb(r, check_hcomp_typing(HK.value(p.x), GH.value(p.y)),
               {label(HK, p.x.dim, p.x.idx), label(GH, p.y.dim, p.y.idx)});
    });

    // Questioned entries: both candidates on every (functor, modification) pair.
    for (auto [dx, dy] : {std::pair{0, 2}, std::pair{2, 0}}) {
        std::vector<CellPair> sub;
        for (const auto& p : pairs)
            if (p.x.dim == dx && p.y.dim == dy)
                sub.push_back(p);
        std::vector<char> printed_ok(sub.size()), composite_ok(sub.size());
        ValidationReport comp = detail::run_instances(ex, static_cast<long>(sub.size()), [&](long i, ValidationReport& r) {
            const auto& p = sub[static_cast<std::size_t>(i)];
            HCell x = HK.value(p.x), y = GH.value(p.y);
            printed_ok[i] = check_pair_entry(x, y, PairEntry::printed).ok();
            ValidationReport c = check_pair_entry(x, y, PairEntry::composite);
            composite_ok[i] = c.ok();
            absorb(r, std::move(c), {label(HK, p.x.dim, p.x.idx), label(GH, p.y.dim, p.y.idx)});
        });
        out.merge(comp);
        long np = 0, nc = 0;
        std::string witness;
        for (std::size_t i = 0; i < sub.size(); ++i) {
            np += printed_ok[i];
            nc += composite_ok[i];
            if (!printed_ok[i] && witness.empty())
                witness = label(HK, sub[i].x.dim, sub[i].x.idx) + "*" + label(GH, sub[i].y.dim, sub[i].y.idx);
        }
        std::ostringstream os;
        os << (dx == 0 ? "H*A" : "B*G") << " pair entry: composite candidate passes " << nc << "/" << sub.size()
           << ", printed candidate passes " << np << "/" << sub.size();
        if (!witness.empty())
            os << " (first failure " << witness << ")";
        os << "; resolved to "
           << (nc == static_cast<long>(sub.size()) ? "composite" : np == static_cast<long>(sub.size()) ? "printed"
                                                                                                         : "neither");
        out.notes.push_back(os.str());
    }
    return out;
}

ValidationReport sweep_hcomp_lemmas(const MappingSpace& GH, const MappingSpace& HK, Exec ex)
{
    const auto pairs = all_pairs(GH, HK);
    std::vector<CellPair> work;
    for (const auto& p : pairs) {
        const int key = p.x.dim * 4 + p.y.dim;
        // (1,1), (1,2), (2,1), (0,3), (3,0)
        if (key == 5 || key == 6 || key == 9 || key == 3 || key == 12)
            work.push_back(p);
    }
    return detail::run_instances(ex, static_cast<long>(work.size()), [&](long i, ValidationReport& r) {
        const auto& p = work[static_cast<std::size_t>(i)];
        HCell x = HK.value(p.x), y = GH.value(p.y);
        const std::vector<std::string> where{label(HK, p.x.dim, p.x.idx), label(GH, p.y.dim, p.y.idx)};
        if (p.x.dim == 1 && p.y.dim == 1) {
            const auto& b = std::get<PseudoTransformation>(x.v);
            const auto& a = std::get<PseudoTransformation>(y.v);
            absorb(r, check_one_sided(b, a), where);
            absorb(r, check_hcomp_modification(b, a), where);
        } else {
            absorb(r, check_hcomp_perturbations(x, y), where);
        }
    });
}

ValidationReport sweep_L_homomorphism(const MappingSpace& Z, const MappingSpace& X, const MappingSpace& Y, Exec ex)
{
    const auto entries = Z.space->table(Op::comp0).entries();
    return detail::run_instances(ex, static_cast<long>(entries.size()), [&](long i, ValidationReport& r) {
        const auto& e = entries[static_cast<std::size_t>(i)];
        absorb(r, check_L_homomorphism(Z.transfs[e.a], Z.transfs[e.b], X, Y), {label(Z, 1, e.a), label(Z, 1, e.b)});
    });
}

ValidationReport sweep_i_naturality(const MappingSpace& HH2, const MappingSpace& from, const MappingSpace& to)
{
    ValidationReport r;
    for (std::size_t k = 0; k < HH2.functors.size(); ++k)
        absorb(r, check_i_naturality(HH2.functors[k], from, to), {label(HH2, 0, static_cast<int>(k))});
    return r;
}

ValidationReport sweep_j_extranaturality(const MappingSpace& GG2, const MappingSpace& GG, const MappingSpace& G2G2)
{
    ValidationReport r;
    for (std::size_t k = 0; k < GG2.functors.size(); ++k)
        absorb(r, check_j_extranaturality(GG2.functors[k], GG, G2G2, GG2), {label(GG2, 0, static_cast<int>(k))});
    return r;
}

} // namespace graycat
