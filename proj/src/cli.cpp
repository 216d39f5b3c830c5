#include "graycat/cli.hpp"

#include "graycat/fixtures.hpp"
#include "graycat/io.hpp"
#include "graycat/sweep.hpp"
#include "graycat/validate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

namespace graycat {

namespace {

int exit_code(const ValidationReport& r) { return r.has_structural() ? 2 : r.ok() ? 0 : 1; }

struct Loaded {
    Document all;
    // Last section of each file, in order.
    std::vector<const Section*> last;
};

Loaded load_all(const std::vector<std::string>& files)
{
    Loaded L;
    std::vector<std::size_t> ends;
    for (const auto& f : files) {
        Document d = load_document(f, &L.all);
        L.all.append(d);
        ends.push_back(d.sections.empty() ? 0 : L.all.sections.size());
    }
    for (std::size_t e : ends)
        L.last.push_back(e ? &L.all.sections[e - 1] : nullptr);
    return L;
}

std::vector<CatPtr> categories(const Document& d)
{
    std::vector<CatPtr> out;
    for (const auto& s : d.sections)
        if (s.kind() == SectionKind::category)
            out.push_back(std::get<CatPtr>(s.value));
    return out;
}

HCell as_hcell(const Section& s)
{
    return std::visit(
        [&](const auto& v) -> HCell {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CatPtr> || std::is_same_v<T, Dictionary>)
                throw std::invalid_argument(std::string(section_keyword(s.kind())) + " '" + s.name +
                                            "' is not a functor, transformation, modification or perturbation");
            else
                return HCell{v};
        },
        s.value);
}

Section::Value as_value(const HCell& x)
{
    return std::visit([](const auto& v) -> Section::Value { return v; }, x.v);
}

// Adds v under `name`, first adding any dom/cod value that has no section yet.
void add_with_dependencies(Document& out, const Document& ctx, const std::string& name, const Section::Value& v)
{
    auto known = [&](const Section::Value& w) { return !out.name_of(w).empty() || !ctx.name_of(w).empty(); };
    auto dep = [&](const Section::Value& w, const std::string& n) {
        if (!known(w))
            add_with_dependencies(out, ctx, n, w);
    };
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, GrayFunctor>) {
                dep(x.dom, x.dom->name());
                dep(x.cod, x.cod->name());
            } else if constexpr (!std::is_same_v<T, CatPtr> && !std::is_same_v<T, Dictionary>) {
                dep(x.dom, name + ".dom");
                dep(x.cod, name + ".cod");
            }
        },
        v);
    out.sections.push_back({name, v});
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

int do_validate(const std::vector<std::string>& files, std::ostream& out)
{
    Loaded L = load_all(files);
    int code = 0;
    for (const auto& s : L.all.sections) {
        ValidationReport r;
        const std::string title = std::string(section_keyword(s.kind())) + " " + s.name;
        if (s.kind() == SectionKind::category) {
            const auto& C = *std::get<CatPtr>(s.value);
            try {
                check_structure(C);
                r = validate_gray_category(C);
            } catch (const StructuralError& e) {
                r.add("structure", {}, "well-formed category", e.what(), true);
            }
        } else if (s.kind() == SectionKind::dictionary) {
            const auto& D = std::get<Dictionary>(s.value);
            MappingSpace M = build_mapping_space(D.dom, D.cod);
            static const SectionKind kinds[] = {SectionKind::functor, SectionKind::pstransf, SectionKind::psmod,
                                                SectionKind::perturbation};
            for (int d = 0; d < 4; ++d) {
                ++r.instances["dictionary size"];
                if (M.space->count(d) != D.space->count(d))
                    r.add("dictionary size", {std::to_string(d) + "-cells"}, std::to_string(M.space->count(d)),
                          std::to_string(D.space->count(d)));
                for (int i = 0; i < D.space->count(d); ++i) {
                    ++r.instances["dictionary value"];
                    const Section* v = L.all.find(kinds[d], D.values[d][i]);
                    const int at = v ? M.find(as_hcell(*v)) : -1;
                    if (at != i)
                        r.add("dictionary value", {D.space->label(d, i)}, "value of this cell",
                              at < 0 ? "not a cell" : "value of " + M.space->label(d, at));
                }
            }
        } else {
            try {
                r = validate(as_hcell(s));
            } catch (const StructuralError& e) {
                r.add("structure", {}, "total component maps", e.what(), true);
            }
        }
        out << format_report(r, title);
        code = std::max(code, exit_code(r));
    }
    return code;
}

HCell compose_op(const std::string& op, const HCell& l, const HCell& r)
{
    auto need = [&](int a, int b) {
        if (l.rank() != a || r.rank() != b)
            throw TypingError("compose " + op + ": expected " + kind_name(a) + " and " + kind_name(b) + ", got " +
                              kind_name(l.rank()) + " and " + kind_name(r.rank()));
    };
    if (op == "hcomp")
        return hcomp(l, r);
    if (op == "functor") {
        need(0, 0);
        return {compose_functors(std::get<0>(l.v), std::get<0>(r.v))};
    }
    if (op == "comp0") {
        need(1, 1);
        return {comp0_pstransf(std::get<1>(l.v), std::get<1>(r.v))};
    }
    if (op == "comp1") {
        need(2, 2);
        return {comp1_psmod(std::get<2>(l.v), std::get<2>(r.v))};
    }
    if (op == "comp2") {
        need(3, 3);
        return {comp2_pert(std::get<3>(l.v), std::get<3>(r.v))};
    }
    // whisk
    switch (l.rank() * 4 + r.rank()) {
    case 6: return {whiskr_psmod(std::get<1>(l.v), std::get<2>(r.v))};
    case 9: return {whiskl_psmod(std::get<2>(l.v), std::get<1>(r.v))};
    case 7: return {whisk_pert(std::get<1>(l.v), std::get<3>(r.v))};
    case 13: return {whisk_pert(std::get<3>(l.v), std::get<1>(r.v))};
    case 11: return {whisk_pert(std::get<2>(l.v), std::get<3>(r.v))};
    case 14: return {whisk_pert(std::get<3>(l.v), std::get<2>(r.v))};
    default:
        throw TypingError(std::string("compose whisk: no whisker of a ") + kind_name(l.rank()) + " with a " +
                          kind_name(r.rank()));
    }
}

const Section& operand(const Loaded& L, const std::string& name, std::size_t from_end)
{
    if (!name.empty()) {
        for (auto it = L.all.sections.rbegin(); it != L.all.sections.rend(); ++it)
            if (it->name == name && it->kind() != SectionKind::category && it->kind() != SectionKind::dictionary)
                return *it;
        throw std::invalid_argument("no value section named '" + name + "'");
    }
    if (L.last.size() >= 2) {
        const Section* s = L.last[L.last.size() - from_end];
        if (s)
            return *s;
    } else if (L.all.sections.size() >= from_end) {
        return L.all.sections[L.all.sections.size() - from_end];
    }
    throw std::invalid_argument("compose needs two operands");
}

int do_compose(const std::string& op, const std::vector<std::string>& files, const std::string& left,
               const std::string& right, const std::string& name, const std::string& path, std::ostream& out)
{
    Loaded L = load_all(files);
    HCell l = as_hcell(operand(L, left, 2));
    HCell r = as_hcell(operand(L, right, 1));
    HCell z = compose_op(op, l, r);
    ValidationReport rep = validate(z);
    Document res;
    add_with_dependencies(res, L.all, name, as_value(z));
    emit(serialize(res, &L.all), path, out);
    if (!path.empty() || !rep.ok())
        out << format_report(rep, "result " + name);
    return exit_code(rep);
}

CatPtr last_category(const std::string& file, Document& ctx)
{
    Document d = load_document(file, &ctx);
    ctx.append(d);
    auto cats = categories(d);
    if (cats.empty())
        throw std::invalid_argument("'" + file + "' has no category section");
    return cats.back();
}

std::string counts(const MappingSpace& M)
{
    const auto& S = *M.space;
    return S.name() + ": " + std::to_string(S.count(0)) + "/" + std::to_string(S.count(1)) + "/" +
           std::to_string(S.count(2)) + "/" + std::to_string(S.count(3)) + " cells";
}

int do_mapspace(const std::string& gfile, const std::string& hfile, const std::string& path, std::ostream& out)
{
    Document ctx;
    CatPtr G = last_category(gfile, ctx);
    CatPtr H = last_category(hfile, ctx);
    MappingSpace M = build_mapping_space(G, H);
    emit(serialize(mapping_space_document(M)), path, out);
    if (!path.empty())
        out << counts(M) << ", tensor multiplicity " << M.tensor_multiplicity << "\n";
    return 0;
}

int do_enumerate(const std::string& kind, const std::string& gfile, const std::string& hfile, const std::string& path,
                 std::ostream& out)
{
    static const std::vector<std::string> kinds{"functor", "pstransf", "psmod", "perturbation"};
    auto it = std::find(kinds.begin(), kinds.end(), kind);
    if (it == kinds.end())
        throw std::invalid_argument("unknown kind '" + kind + "'");
    const int upto = static_cast<int>(it - kinds.begin());
    Document ctx;
    CatPtr G = last_category(gfile, ctx);
    CatPtr H = last_category(hfile, ctx);
    Document doc;
    std::array<std::size_t, 4> n{};
    auto fs = enumerate_functors(G, H);
    for (std::size_t i = 0; i < fs.size(); ++i)
        doc.sections.push_back({"F" + std::to_string(i), fs[i]});
    n[0] = fs.size();
    std::vector<PseudoTransformation> ts;
    if (upto >= 1)
        for (const auto& a : fs)
            for (const auto& b : fs)
                for (auto& t : enumerate_pstransf(a, b))
                    ts.push_back(std::move(t));
    for (std::size_t i = 0; i < ts.size(); ++i)
        doc.sections.push_back({"t" + std::to_string(i), ts[i]});
    n[1] = ts.size();
    std::vector<PseudoModification> ms;
    if (upto >= 2)
        for (const auto& a : ts)
            for (const auto& b : ts)
                if (a.dom == b.dom && a.cod == b.cod)
                    for (auto& m : enumerate_psmod(a, b))
                        ms.push_back(std::move(m));
    for (std::size_t i = 0; i < ms.size(); ++i)
        doc.sections.push_back({"m" + std::to_string(i), ms[i]});
    n[2] = ms.size();
    std::vector<Perturbation> ps;
    if (upto >= 3)
        for (const auto& a : ms)
            for (const auto& b : ms)
                if (a.dom == b.dom && a.cod == b.cod)
                    for (auto& p : enumerate_pert(a, b))
                        ps.push_back(std::move(p));
    for (std::size_t i = 0; i < ps.size(); ++i)
        doc.sections.push_back({"p" + std::to_string(i), ps[i]});
    n[3] = ps.size();
    std::string text = serialize(doc, &ctx);
    text += "# " + std::to_string(n[upto]) + " " + kind + "\n";
    emit(text, path, out);
    if (!path.empty())
        out << n[upto] << " " << kind << "\n";
    return 0;
}

class Spaces {
public:
    const MappingSpace& get(const CatPtr& G, const CatPtr& H)
    {
        auto key = std::pair{G.get(), H.get()};
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, build_mapping_space(G, H)).first;
        return it->second;
    }

private:
    std::map<std::pair<const FiniteGrayCategory*, const FiniteGrayCategory*>, MappingSpace> cache_;
};

int do_check(const std::string& theorem, const std::vector<std::string>& files, std::ostream& out)
{
    static const std::map<std::string, int> roles{
        {"pasteunit", 3},   {"interchange", 3},    {"hcomp-typing", 3}, {"hcomp-lemmas", 3},
        {"L-welldef", 3},   {"L-homomorphism", 3}, {"i-naturality", 2}, {"j-extranaturality", 2},
    };
    auto rit = roles.find(theorem);
    if (rit == roles.end())
        throw std::invalid_argument("unknown theorem '" + theorem + "'");
    Loaded L = load_all(files);
    auto cats = categories(L.all);
    if (cats.empty())
        throw std::invalid_argument("check needs at least one category");
    while (static_cast<int>(cats.size()) < rit->second)
        cats.push_back(cats.back());

    ValidationReport r;
    for (int i = 0; i < rit->second; ++i) {
        if (i > 0 && cats[i].get() == cats[i - 1].get())
            continue;
        check_structure(*cats[i]);
        r.merge(validate_gray_category(*cats[i]), "category " + cats[i]->name() + ": ");
    }
    if (!r.ok()) {
        out << format_report(r, "check " + theorem);
        return exit_code(r);
    }
    Spaces S;
    const auto& A = cats[0];
    const auto& B = cats[1];
    if (theorem == "pasteunit") {
        r.merge(sweep_pasteunit(S.get(A, B), S.get(B, cats[2])));
    } else if (theorem == "interchange") {
        r.merge(sweep_interchange(S.get(A, B), S.get(B, cats[2])));
    } else if (theorem == "hcomp-typing") {
        r.merge(sweep_hcomp_typing(S.get(A, B), S.get(B, cats[2])));
    } else if (theorem == "hcomp-lemmas") {
        r.merge(sweep_hcomp_lemmas(S.get(A, B), S.get(B, cats[2])));
    } else if (theorem == "L-welldef") {
        r.merge(check_L_welldef(S.get(B, cats[2]), S.get(A, B), S.get(A, cats[2])));
    } else if (theorem == "L-homomorphism") {
        r.merge(sweep_L_homomorphism(S.get(B, cats[2]), S.get(A, B), S.get(A, cats[2])));
    } else if (theorem == "i-naturality") {
        auto one = std::make_shared<const FiniteGrayCategory>(build_walking(0));
        r.merge(sweep_i_naturality(S.get(A, B), S.get(one, A), S.get(one, B)));
        r.notes.push_back("i realized as evaluation at the object of walking0 (candidate)");
    } else {
        r.merge(sweep_j_extranaturality(S.get(A, B), S.get(A, A), S.get(B, B)));
        r.notes.push_back("j realized as the identity-functor cell (candidate)");
    }
    out << format_report(r, "check " + theorem);
    return exit_code(r);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite Gray-categories, their mapping spaces and the horizontal composition", "graycat"};
    app.require_subcommand(1);
    int jobs_n = 0;
    app.add_option("--jobs,-j", jobs_n, "Threads for parallel checks (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

    std::vector<std::string> files;
    std::string op, kind, theorem, gfile, hfile, path, left, right, name = "result";

    auto* validate_cmd = app.add_subcommand("validate", "Validate every section of the given files");
    validate_cmd->add_option("files", files, "graycat v1 files")->required();

    auto* compose_cmd = app.add_subcommand("compose", "Compose two values and print the result");
    compose_cmd->add_option("op", op, "functor | comp0 | comp1 | comp2 | whisk | hcomp")
        ->required()
        ->check(CLI::IsMember({"functor", "comp0", "comp1", "comp2", "whisk", "hcomp"}));
    compose_cmd->add_option("files", files, "files holding the operands and their context")->required();
    compose_cmd->add_option("--left", left, "left operand section (default: last section of the second-to-last file)");
    compose_cmd->add_option("--right", right, "right operand section (default: last section of the last file)");
    compose_cmd->add_option("--name", name, "name of the result section");
    compose_cmd->add_option("-o,--output", path, "output file");

    auto* mapspace_cmd = app.add_subcommand("mapspace", "Build the mapping space [G, H]");
    mapspace_cmd->add_option("G", gfile, "file whose last category is G")->required();
    mapspace_cmd->add_option("H", hfile, "file whose last category is H")->required();
    mapspace_cmd->add_option("-o,--output", path, "output file");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate functors or transfors G -> H");
    enumerate_cmd->add_option("kind", kind, "functor | pstransf | psmod | perturbation")
        ->required()
        ->check(CLI::IsMember({"functor", "pstransf", "psmod", "perturbation"}));
    enumerate_cmd->add_option("G", gfile, "file whose last category is G")->required();
    enumerate_cmd->add_option("H", hfile, "file whose last category is H")->required();
    enumerate_cmd->add_option("-o,--output", path, "output file");

    auto* check_cmd = app.add_subcommand("check", "Check a theorem over the categories of the given files");
    check_cmd->add_option("theorem", theorem)
        ->required()
        ->check(CLI::IsMember({"pasteunit", "interchange", "hcomp-typing", "hcomp-lemmas", "L-welldef",
                               "L-homomorphism", "i-naturality", "j-extranaturality"}));
    check_cmd->add_option("files", files, "categories in role order; the last one is repeated as needed")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "graycat: " << e.what() << "\n";
        return 2;
    }
    set_jobs(jobs_n);
    try {
        if (*validate_cmd)
            return do_validate(files, out);
        if (*compose_cmd)
            return do_compose(op, files, left, right, name, path, out);
        if (*mapspace_cmd)
            return do_mapspace(gfile, hfile, path, out);
        if (*enumerate_cmd)
            return do_enumerate(kind, gfile, hfile, path, out);
        return do_check(theorem, files, out);
    } catch (const std::exception& e) {
        err << "graycat: " << e.what() << "\n";
        return 2;
    }
}

} // namespace graycat
