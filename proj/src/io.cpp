#include "graycat/io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace graycat {

ParseError::ParseError(int line_, int column_, const std::string& msg, const std::string& file)
    : std::runtime_error((file.empty() ? "" : file + ": ") + "line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + msg),
      line(line_), column(column_), message(msg)
{
}

const char* section_keyword(SectionKind k)
{
    static const char* names[] = {"category", "functor", "pstransf", "psmod", "perturbation", "dictionary"};
    return names[static_cast<int>(k)];
}

const Section* Document::find(SectionKind k, std::string_view name) const
{
    for (auto it = sections.rbegin(); it != sections.rend(); ++it)
        if (it->kind() == k && it->name == name)
            return &*it;
    return nullptr;
}

namespace {

bool same_value(const Section::Value& a, const Section::Value& b)
{
    if (a.index() != b.index())
        return false;
    if (a.index() == 0)
        return std::get<0>(a).get() == std::get<0>(b).get();
    return a == b;
}

} // namespace

std::string Document::name_of(const Section::Value& v) const
{
    for (auto it = sections.rbegin(); it != sections.rend(); ++it)
        if (same_value(it->value, v))
            return it->name;
    return {};
}

void Document::append(const Document& other)
{
    sections.insert(sections.end(), other.sections.begin(), other.sections.end());
}

namespace {

struct Token {
    std::string text;
    int col;
};

struct Line {
    int no;
    std::vector<Token> tok;

    [[noreturn]] void fail(std::size_t i, const std::string& msg) const
    {
        throw ParseError(no, i < tok.size() ? tok[i].col : (tok.empty() ? 1 : tok.back().col), msg);
    }
    const std::string& at(std::size_t i) const
    {
        if (i >= tok.size())
            fail(i, "unexpected end of line");
        return tok[i].text;
    }
    void expect(std::size_t i, const char* word) const
    {
        if (at(i) != word)
            fail(i, std::string("expected '") + word + "', found '" + tok[i].text + "'");
    }
    void expect_size(std::size_t n) const
    {
        if (tok.size() > n)
            fail(n, "unexpected token '" + tok[n].text + "'");
        if (tok.size() < n)
            fail(tok.size(), "unexpected end of line");
    }
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    int no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++no;
        if (auto h = raw.find('#'); h != std::string_view::npos)
            raw = raw.substr(0, h);
        Line l{no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
                ++j;
            if (j > i)
                l.tok.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
            i = j;
        }
        if (!l.tok.empty())
            out.push_back(std::move(l));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return out;
}

// Label resolution with optional "@dim" qualifier.
class Labels {
public:
    explicit Labels(const FiniteGrayCategory& C) : C_(C) {}

    int in_dim(const Line& l, std::size_t i, int dim) const
    {
        auto [label, qual] = split(l.at(i));
        if (qual && *qual != dim)
            l.fail(i, "'" + l.at(i) + "' is not a " + std::to_string(dim) + "-cell");
        auto c = C_.find(dim, label);
        if (!c)
            l.fail(i, "unknown " + std::to_string(dim) + "-cell '" + label + "' in " + C_.name());
        return *c;
    }

    Cell any(const Line& l, std::size_t i, int lo, int hi) const
    {
        auto [label, qual] = split(l.at(i));
        if (qual)
            return {*qual, in_dim(l, i, *qual)};
        Cell found;
        for (int d = lo; d <= hi; ++d)
            if (auto c = C_.find(d, label)) {
                if (found.valid())
                    l.fail(i, "ambiguous id '" + label + "'; qualify it as " + label + "@<dim>");
                found = {d, *c};
            }
        if (!found.valid())
            l.fail(i, "unknown cell '" + label + "' in " + C_.name());
        return found;
    }

    static std::pair<std::string, std::optional<int>> split(const std::string& t)
    {
        auto at = t.rfind('@');
        if (at != std::string::npos && at + 2 == t.size() && t[at + 1] >= '0' && t[at + 1] <= '3')
            return {t.substr(0, at), t[at + 1] - '0'};
        return {t, std::nullopt};
    }

private:
    const FiniteGrayCategory& C_;
};

std::string qualified(const FiniteGrayCategory& C, int dim, int i)
{
    const std::string& s = C.label(dim, i);
    for (int d = 0; d < 4; ++d)
        if (d != dim && C.find(d, s))
            return s + "@" + std::to_string(dim);
    return s;
}

bool valid_id(const std::string& s)
{
    if (s.empty() || s == "=" || s == "end")
        return false;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
            return false;
    return true;
}

class Parser {
public:
    Parser(std::string_view text, const Document* context) : lines_(tokenize(text)), ctx_(context) {}

    Document run()
    {
        if (lines_.empty())
            throw ParseError(1, 1, "missing 'graycat v1' header");
        const Line& h = lines_[0];
        h.expect(0, "graycat");
        if (h.at(1) != "v1")
            h.fail(1, "unsupported format version '" + h.at(1) + "'");
        h.expect_size(2);
        pos_ = 1;
        while (pos_ < lines_.size()) {
            const Line& l = lines_[pos_++];
            const std::string& kw = l.at(0);
            Section s;
            if (kw == "category")
                s = category(l);
            else if (kw == "functor")
                s = functor(l);
            else if (kw == "pstransf")
                s = pstransf(l);
            else if (kw == "psmod")
                s = psmod(l);
            else if (kw == "perturbation")
                s = perturbation(l);
            else if (kw == "dictionary")
                s = dictionary(l);
            else
                l.fail(0, "unknown section kind '" + kw + "'");
            if (doc_.find(s.kind(), s.name))
                l.fail(1, std::string("duplicate ") + section_keyword(s.kind()) + " '" + s.name + "'");
            doc_.sections.push_back(std::move(s));
        }
        return std::move(doc_);
    }

private:
    // Body lines up to the closing "end"; returns the "end" line.
    const Line& body(const Line& header, const std::function<void(const Line&)>& each)
    {
        while (pos_ < lines_.size()) {
            const Line& l = lines_[pos_++];
            if (l.at(0) == "end") {
                l.expect_size(1);
                return l;
            }
            each(l);
        }
        header.fail(0, std::string("section '") + header.at(0) + "' is not closed by 'end'");
    }

    const Section& ref(const Line& l, std::size_t i, SectionKind k) const
    {
        const std::string& n = l.at(i);
        const Section* s = doc_.find(k, n);
        if (!s && ctx_)
            s = ctx_->find(k, n);
        if (!s)
            l.fail(i, std::string("unknown ") + section_keyword(k) + " '" + n + "'");
        return *s;
    }

    std::string name(const Line& l) const
    {
        if (!valid_id(l.at(1)))
            l.fail(1, "invalid section name '" + l.at(1) + "'");
        return l.at(1);
    }

    // "<kw> <name> : <a> <arrow> <b>"
    std::pair<const Section*, const Section*> typed_header(const Line& l, SectionKind k, const char* arrow) const
    {
        l.expect_size(6);
        l.expect(2, ":");
        l.expect(4, arrow);
        return {&ref(l, 3, k), &ref(l, 5, k)};
    }

    Section category(const Line& h)
    {
        h.expect_size(2);
        auto C = std::make_shared<FiniteGrayCategory>(name(h));
        std::array<std::vector<std::pair<std::string, int>>, 4> cells;
        std::array<std::map<std::string, int>, 4> seen;
        std::vector<const Line*> rest;
        body(h, [&](const Line& l) {
            if (l.at(0) == "cells") {
                const std::string& d = l.at(1);
                if (d.size() != 2 || d[1] != ':' || d[0] < '0' || d[0] > '3')
                    l.fail(1, "expected '<dim>:' with dim 0..3");
                int dim = d[0] - '0';
                for (std::size_t i = 2; i < l.tok.size(); ++i) {
                    const std::string& id = l.tok[i].text;
                    if (!valid_id(id) || Labels::split(id).second)
                        l.fail(i, "invalid cell id '" + id + "'");
                    if (!seen[dim].emplace(id, l.no).second)
                        l.fail(i, "duplicate " + std::to_string(dim) + "-cell id '" + id + "'");
                    cells[dim].push_back({id, l.no});
                }
            } else {
                rest.push_back(&l);
            }
        });
        // Boundaries are needed before cells can be added; resolve them by label.
        auto label_dim = [&](const Line& l, std::size_t i, int lo, int hi) -> std::pair<int, std::string> {
            auto [label, qual] = Labels::split(l.at(i));
            int found = -1;
            for (int d = lo; d <= hi; ++d)
                if ((!qual || *qual == d) && seen[d].count(label)) {
                    if (found >= 0)
                        l.fail(i, "ambiguous id '" + label + "'; qualify it as " + label + "@<dim>");
                    found = d;
                }
            if (found < 0)
                l.fail(i, "unknown cell '" + l.at(i) + "'");
            return {found, label};
        };
        std::array<std::map<std::string, std::string>, 4> src, tgt;
        for (const Line* l : rest) {
            const std::string& kw = l->at(0);
            if (kw != "src" && kw != "tgt")
                continue;
            l->expect_size(4);
            l->expect(2, "=");
            auto [d, a] = label_dim(*l, 1, 1, 3);
            std::string b = label_dim(*l, 3, d - 1, d - 1).second;
            auto& m = kw == "src" ? src[d] : tgt[d];
            if (!m.emplace(a, b).second)
                l->fail(1, kw + " of '" + a + "' given twice");
        }
        for (int d = 0; d < 4; ++d)
            for (const auto& [id, line] : cells[d]) {
                int s = -1, t = -1;
                if (d > 0) {
                    if (!src[d].count(id) || !tgt[d].count(id))
                        throw ParseError(line, 1, std::to_string(d) + "-cell '" + id + "' has no src/tgt line");
                    s = *C->find(d - 1, src[d].at(id));
                    t = *C->find(d - 1, tgt[d].at(id));
                }
                C->add_cell(d, id, s, t);
            }
        Labels L(*C);
        std::array<std::map<int, int>, 4> given_id, given_inv;
        std::array<std::map<std::pair<int, int>, int>, kOpCount> given_op;
        for (const Line* lp : rest) {
            const Line& l = *lp;
            const std::string& kw = l.at(0);
            if (kw == "src" || kw == "tgt")
                continue;
            if (kw == "id" || kw == "inv") {
                l.expect_size(4);
                l.expect(2, "=");
                Cell a = L.any(l, 1, kw == "id" ? 0 : 1, kw == "id" ? 2 : 3);
                int b = L.in_dim(l, 3, kw == "id" ? a.dim + 1 : a.dim);
                auto& m = kw == "id" ? given_id[a.dim] : given_inv[a.dim];
                if (!m.emplace(a.idx, b).second)
                    l.fail(1, kw + " of '" + l.at(1) + "' given twice");
                if (kw == "id")
                    C->set_identity(a.dim, a.idx, b);
                else
                    C->set_inverse(a.dim, a.idx, b);
                continue;
            }
            std::size_t first = 1;
            std::optional<Op> op;
            if (kw == "whisk") {
                op = op_from_name("whisk_" + l.at(1));
                if (!op || op_shape(*op).left == op_shape(*op).right)
                    l.fail(1, "unknown whisker kind '" + l.at(1) + "'");
                first = 2;
            } else if (kw == "comp0" || kw == "comp1" || kw == "comp2" || kw == "tensor") {
                op = op_from_name(kw);
            } else {
                l.fail(0, "unknown category line '" + kw + "'");
            }
            l.expect_size(first + 4);
            l.expect(first + 2, "=");
            const OpShape& s = op_shape(*op);
            int a = L.in_dim(l, first, s.left);
            int b = L.in_dim(l, first + 1, s.right);
            int c = L.in_dim(l, first + 3, s.result);
            if (!given_op[static_cast<int>(*op)].emplace(std::pair{a, b}, c).second)
                l.fail(first, "entry " + kw + " " + l.at(first) + " " + l.at(first + 1) + " given twice");
            C->set(*op, a, b, c);
        }
        C->finalize();
        return {C->name(), CatPtr(C)};
    }

    // "<key> <a> = <b>" lines keyed by dimension suffix or fixed dims.
    Section functor(const Line& h)
    {
        h.expect_size(6);
        h.expect(2, ":");
        h.expect(4, "->");
        const CatPtr G = std::get<CatPtr>(ref(h, 3, SectionKind::category).value);
        const CatPtr H = std::get<CatPtr>(ref(h, 5, SectionKind::category).value);
        GrayFunctor F{G, H, {}};
        for (int d = 0; d < 4; ++d)
            F.map[d].assign(G->count(d), -1);
        Labels LG(*G), LH(*H);
        const Line& end = body(h, [&](const Line& l) {
            const std::string& kw = l.at(0);
            if (kw.size() != 4 || kw.compare(0, 3, "map") != 0 || kw[3] < '0' || kw[3] > '3')
                l.fail(0, "expected map0..map3, found '" + kw + "'");
            int d = kw[3] - '0';
            l.expect_size(4);
            l.expect(2, "=");
            int a = LG.in_dim(l, 1, d);
            if (F.map[d][a] >= 0)
                l.fail(1, kw + " of '" + l.at(1) + "' given twice");
            F.map[d][a] = LH.in_dim(l, 3, d);
        });
        for (int d = 0; d < 4; ++d)
            for (int i = 0; i < G->count(d); ++i)
                if (F.map[d][i] < 0)
                    end.fail(0, "functor '" + h.at(1) + "' has no map" + std::to_string(d) + " line for '" +
                                    G->label(d, i) + "'");
        return {name(h), std::move(F)};
    }

    // Shared body reader for the at0/at1/at2 families.
    template <typename Assign>
    const Line& components(const Line& h, const FiniteGrayCategory& S, const FiniteGrayCategory& T,
                           std::vector<std::vector<int>*> at, int lift, Assign&& extra)
    {
        for (std::size_t k = 0; k < at.size(); ++k)
            at[k]->assign(S.count(static_cast<int>(k)), -1);
        Labels LS(S), LT(T);
        const Line& end = body(h, [&](const Line& l) {
            const std::string& kw = l.at(0);
            if (extra(l, LS, LT))
                return;
            int k = -1;
            for (std::size_t j = 0; j < at.size(); ++j)
                if (kw == "at" + std::to_string(j))
                    k = static_cast<int>(j);
            if (k < 0)
                l.fail(0, "unexpected line '" + kw + "' in " + h.at(0));
            l.expect_size(4);
            l.expect(2, "=");
            int a = LS.in_dim(l, 1, k);
            auto& v = *at[k];
            if (v[a] >= 0)
                l.fail(1, kw + " of '" + l.at(1) + "' given twice");
            v[a] = LT.in_dim(l, 3, k + lift);
        });
        for (std::size_t k = 0; k < at.size(); ++k)
            for (int i = 0; i < S.count(static_cast<int>(k)); ++i)
                if ((*at[k])[i] < 0)
                    end.fail(0, h.at(0) + " '" + h.at(1) + "' has no at" + std::to_string(k) + " line for '" +
                                    S.label(static_cast<int>(k), i) + "'");
        return end;
    }

    Section pstransf(const Line& h)
    {
        auto [a, b] = typed_header(h, SectionKind::functor, "=>");
        PseudoTransformation t{std::get<GrayFunctor>(a->value), std::get<GrayFunctor>(b->value), {}, {}, {}, {}};
        const auto& S = *t.dom.dom;
        const auto& T = *t.dom.cod;
        const int n1 = S.count(1);
        t.coc.assign(static_cast<std::size_t>(n1) * n1, -1);
        components(h, S, T, {&t.at0, &t.at1, &t.at2}, 1, [&](const Line& l, const Labels& LS, const Labels& LT) {
            if (l.at(0) != "coc")
                return false;
            l.expect_size(5);
            l.expect(3, "=");
            int f2 = LS.in_dim(l, 1, 1), f1 = LS.in_dim(l, 2, 1);
            auto& slot = t.coc[static_cast<std::size_t>(f2) * n1 + f1];
            if (slot >= 0)
                l.fail(1, "coc " + l.at(1) + " " + l.at(2) + " given twice");
            slot = LT.in_dim(l, 4, 3);
            return true;
        });
        return {name(h), std::move(t)};
    }

    Section psmod(const Line& h)
    {
        auto [a, b] = typed_header(h, SectionKind::pstransf, "=>");
        PseudoModification m{std::get<PseudoTransformation>(a->value), std::get<PseudoTransformation>(b->value), {}, {}};
        components(h, m.source(), m.target(), {&m.at0, &m.at1}, 2,
                   [](const Line&, const Labels&, const Labels&) { return false; });
        return {name(h), std::move(m)};
    }

    Section perturbation(const Line& h)
    {
        auto [a, b] = typed_header(h, SectionKind::psmod, "=>");
        Perturbation p{std::get<PseudoModification>(a->value), std::get<PseudoModification>(b->value), {}};
        components(h, p.source(), p.target(), {&p.at0}, 3,
                   [](const Line&, const Labels&, const Labels&) { return false; });
        return {name(h), std::move(p)};
    }

    Section dictionary(const Line& h)
    {
        h.expect_size(6);
        h.expect(2, ":");
        h.expect(4, "->");
        Dictionary D;
        D.space = std::get<CatPtr>(ref(h, 1, SectionKind::category).value);
        D.dom = std::get<CatPtr>(ref(h, 3, SectionKind::category).value);
        D.cod = std::get<CatPtr>(ref(h, 5, SectionKind::category).value);
        for (int d = 0; d < 4; ++d)
            D.values[d].assign(D.space->count(d), {});
        Labels L(*D.space);
        static const SectionKind kinds[] = {SectionKind::functor, SectionKind::pstransf, SectionKind::psmod,
                                            SectionKind::perturbation};
        const Line& end = body(h, [&](const Line& l) {
            const std::string& kw = l.at(0);
            if (kw.size() != 6 || kw.compare(0, 5, "value") != 0 || kw[5] < '0' || kw[5] > '3')
                l.fail(0, "expected value0..value3, found '" + kw + "'");
            int d = kw[5] - '0';
            l.expect_size(4);
            l.expect(2, "=");
            int c = L.in_dim(l, 1, d);
            ref(l, 3, kinds[d]);
            if (!D.values[d][c].empty())
                l.fail(1, kw + " of '" + l.at(1) + "' given twice");
            D.values[d][c] = l.at(3);
        });
        for (int d = 0; d < 4; ++d)
            for (int i = 0; i < D.space->count(d); ++i)
                if (D.values[d][i].empty())
                    end.fail(0, "dictionary has no value for " + std::to_string(d) + "-cell '" +
                                    D.space->label(d, i) + "'");
        return {h.at(1), std::move(D)};
    }

    std::vector<Line> lines_;
    const Document* ctx_;
    std::size_t pos_ = 0;
    Document doc_;
};

class Writer {
public:
    Writer(const Document& doc, const Document* ctx) : doc_(doc), ctx_(ctx) {}

    std::string run()
    {
        os_ << "graycat v" << doc_.version << "\n";
        for (std::size_t i = 0; i < doc_.sections.size(); ++i) {
            upto_ = i;
            const Section& s = doc_.sections[i];
            os_ << "\n";
            std::visit([&](const auto& v) { write(s.name, v); }, s.value);
            os_ << "end\n";
        }
        return os_.str();
    }

private:
    // Name of an earlier section (or context section) holding v.
    std::string name(const Section::Value& v, const char* what) const
    {
        for (std::size_t i = upto_; i-- > 0;)
            if (same_value(doc_.sections[i].value, v))
                return doc_.sections[i].name;
        if (ctx_) {
            std::string n = ctx_->name_of(v);
            if (!n.empty())
                return n;
        }
        throw std::invalid_argument(std::string("serialize: ") + what + " has no section of its own");
    }

    void write(const std::string& n, const CatPtr& C)
    {
        os_ << "category " << n << "\n";
        for (int d = 0; d < 4; ++d) {
            os_ << "cells " << d << ":";
            for (int i = 0; i < C->count(d); ++i)
                os_ << " " << C->label(d, i);
            os_ << "\n";
        }
        for (int d = 1; d < 4; ++d)
            for (int i = 0; i < C->count(d); ++i) {
                os_ << "src " << qualified(*C, d, i) << " = " << qualified(*C, d - 1, C->src(d, i)) << "\n";
                os_ << "tgt " << qualified(*C, d, i) << " = " << qualified(*C, d - 1, C->tgt(d, i)) << "\n";
            }
        for (int d = 0; d < 3; ++d)
            for (int i = 0; i < C->count(d); ++i)
                if (int e = C->identity_entry(d, i); e >= 0)
                    os_ << "id " << qualified(*C, d, i) << " = " << qualified(*C, d + 1, e) << "\n";
        for (Op op : all_ops()) {
            const OpShape& s = op_shape(op);
            std::string kw = s.name;
            if (kw.compare(0, 6, "whisk_") == 0)
                kw = "whisk " + kw.substr(6);
            for (const auto& e : C->table(op).entries())
                os_ << kw << " " << qualified(*C, s.left, e.a) << " " << qualified(*C, s.right, e.b) << " = "
                    << qualified(*C, s.result, e.c) << "\n";
        }
        for (int d = 1; d < 4; ++d)
            for (int i = 0; i < C->count(d); ++i)
                if (int v = C->stored_inverse(d, i); v >= 0)
                    os_ << "inv " << qualified(*C, d, i) << " = " << qualified(*C, d, v) << "\n";
    }

    void write(const std::string& n, const GrayFunctor& F)
    {
        os_ << "functor " << n << " : " << name(F.dom, "category") << " -> " << name(F.cod, "category") << "\n";
        for (int d = 0; d < 4; ++d)
            for (int i = 0; i < F.dom->count(d); ++i)
                os_ << "map" << d << " " << qualified(*F.dom, d, i) << " = " << qualified(*F.cod, d, F.map[d][i])
                    << "\n";
    }

    void family(const FiniteGrayCategory& S, const FiniteGrayCategory& T, int k, int lift, const std::vector<int>& v)
    {
        for (int i = 0; i < S.count(k); ++i)
            os_ << "at" << k << " " << qualified(S, k, i) << " = " << qualified(T, k + lift, v.at(i)) << "\n";
    }

    void write(const std::string& n, const PseudoTransformation& t)
    {
        os_ << "pstransf " << n << " : " << name(t.dom, "functor") << " => " << name(t.cod, "functor") << "\n";
        const auto& S = t.source();
        const auto& T = t.target();
        family(S, T, 0, 1, t.at0);
        family(S, T, 1, 1, t.at1);
        family(S, T, 2, 1, t.at2);
        const int n1 = S.count(1);
        for (int f2 = 0; f2 < n1; ++f2)
            for (int f1 = 0; f1 < n1; ++f1)
                if (int c = t.coc[static_cast<std::size_t>(f2) * n1 + f1]; c >= 0)
                    os_ << "coc " << qualified(S, 1, f2) << " " << qualified(S, 1, f1) << " = " << qualified(T, 3, c)
                        << "\n";
    }

    void write(const std::string& n, const PseudoModification& m)
    {
        os_ << "psmod " << n << " : " << name(m.dom, "transformation") << " => " << name(m.cod, "transformation")
            << "\n";
        family(m.source(), m.target(), 0, 2, m.at0);
        family(m.source(), m.target(), 1, 2, m.at1);
    }

    void write(const std::string& n, const Perturbation& p)
    {
        os_ << "perturbation " << n << " : " << name(p.dom, "modification") << " => " << name(p.cod, "modification")
            << "\n";
        family(p.source(), p.target(), 0, 3, p.at0);
    }

    void write(const std::string& n, const Dictionary& D)
    {
        os_ << "dictionary " << n << " : " << name(D.dom, "category") << " -> " << name(D.cod, "category") << "\n";
        for (int d = 0; d < 4; ++d)
            for (int i = 0; i < D.space->count(d); ++i)
                os_ << "value" << d << " " << qualified(*D.space, d, i) << " = " << D.values[d][i] << "\n";
    }

    const Document& doc_;
    const Document* ctx_;
    std::size_t upto_ = 0;
    std::ostringstream os_;
};

} // namespace

Document parse(std::string_view text, const Document* context) { return Parser(text, context).run(); }

std::string serialize(const Document& doc, const Document* context) { return Writer(doc, context).run(); }

Document load_document(const std::string& path, const Document* context)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse(ss.str(), context);
    } catch (const ParseError& e) {
        throw ParseError(e.line, e.column, e.message, path);
    }
}

Document mapping_space_document(const MappingSpace& M)
{
    Document doc;
    doc.sections.push_back({M.dom->name(), M.dom});
    if (M.cod.get() != M.dom.get())
        doc.sections.push_back({M.cod->name(), M.cod});
    doc.sections.push_back({M.space->name(), M.space});
    const auto& S = *M.space;
    for (std::size_t i = 0; i < M.functors.size(); ++i)
        doc.sections.push_back({S.label(0, static_cast<int>(i)), M.functors[i]});
    for (std::size_t i = 0; i < M.transfs.size(); ++i)
        doc.sections.push_back({S.label(1, static_cast<int>(i)), M.transfs[i]});
    for (std::size_t i = 0; i < M.mods.size(); ++i)
        doc.sections.push_back({S.label(2, static_cast<int>(i)), M.mods[i]});
    for (std::size_t i = 0; i < M.perts.size(); ++i)
        doc.sections.push_back({S.label(3, static_cast<int>(i)), M.perts[i]});
    Dictionary D{M.space, M.dom, M.cod, {}};
    for (int d = 0; d < 4; ++d)
        for (int i = 0; i < S.count(d); ++i)
            D.values[d].push_back(S.label(d, i));
    doc.sections.push_back({S.name(), std::move(D)});
    return doc;
}

} // namespace graycat
