#include "graycat/fixtures.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace graycat {

int AbelianGroup::size() const
{
    int n = 1;
    for (int o : orders)
        n *= o;
    return n;
}

std::vector<int> AbelianGroup::digits(int a) const
{
    std::vector<int> d(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
        d[i] = a % orders[i];
        a /= orders[i];
    }
    return d;
}

int AbelianGroup::from_digits(const std::vector<int>& d) const
{
    int a = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
        a = a * orders[i] + d[i];
    return a;
}

int AbelianGroup::add(int a, int b) const
{
    auto x = digits(a), y = digits(b);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = (x[i] + y[i]) % orders[i];
    return from_digits(x);
}

int AbelianGroup::neg(int a) const
{
    auto x = digits(a);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = (orders[i] - x[i]) % orders[i];
    return from_digits(x);
}

std::string AbelianGroup::label(int a) const
{
    if (orders.empty())
        return "0";
    auto d = digits(a);
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "." : "") + std::to_string(d[i]);
    return s;
}

Bicharacter bicharacter_from(const AbelianGroup& A, const AbelianGroup& U, int (*fn)(int, int))
{
    const int n = A.size();
    Bicharacter c(static_cast<std::size_t>(n * n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            c[b * n + a] = ((fn(b, a) % U.size()) + U.size()) % U.size();
    return c;
}

FiniteGrayCategory build_bicharacter_gray(const AbelianGroup& A, const AbelianGroup& U, const Bicharacter& c,
                                          const std::string& name)
{
    const int na = A.size(), nu = U.size();
    if (static_cast<int>(c.size()) != na * na)
        throw std::invalid_argument("bicharacter table has the wrong size");
    auto C_ = [&](int b, int a) { return c[b * na + a]; };
    for (int b = 0; b < na; ++b)
        for (int a = 0; a < na; ++a) {
            if (C_(b, a) < 0 || C_(b, a) >= nu)
                throw std::invalid_argument("bicharacter value out of range");
            for (int x = 0; x < na; ++x) {
                if (C_(A.add(b, x), a) != U.add(C_(b, a), C_(x, a)))
                    throw std::invalid_argument("bicharacter not additive in the first argument at (" +
                                                A.label(b) + ", " + A.label(x) + "; " + A.label(a) + ")");
                if (C_(b, A.add(a, x)) != U.add(C_(b, a), C_(b, x)))
                    throw std::invalid_argument("bicharacter not additive in the second argument at (" +
                                                A.label(b) + "; " + A.label(a) + ", " + A.label(x) + ")");
            }
        }

    FiniteGrayCategory C(name);
    C.add_cell(0, "*");
    C.add_cell(1, "e", 0, 0);
    C.set_identity(0, 0, 0);
    for (int a = 0; a < na; ++a)
        C.add_cell(2, A.label(a), 0, 0);
    C.set_identity(1, 0, 0);
    auto cell3 = [&](int a, int u) { return a * nu + u; };
    for (int a = 0; a < na; ++a)
        for (int u = 0; u < nu; ++u)
            C.add_cell(3, "(" + A.label(a) + "," + U.label(u) + ")", a, a);
    for (int a = 0; a < na; ++a)
        C.set_identity(2, a, cell3(a, 0));

    C.set(Op::comp0, 0, 0, 0);
    for (int a = 0; a < na; ++a) {
        C.set(Op::whisk_1on2, 0, a, a);
        C.set(Op::whisk_2on1, a, 0, a);
        for (int b = 0; b < na; ++b) {
            C.set(Op::comp1, b, a, A.add(a, b));
            C.set(Op::tensor, b, a, cell3(A.add(a, b), C_(b, a)));
        }
    }
    for (int a = 0; a < na; ++a)
        for (int u = 0; u < nu; ++u) {
            const int g = cell3(a, u);
            C.set(Op::whisk_1on3, 0, g, g);
            C.set(Op::whisk_3on1, g, 0, g);
            for (int b = 0; b < na; ++b) {
                C.set(Op::whisk_2on3, b, g, cell3(A.add(a, b), u));
                C.set(Op::whisk_3on2, g, b, cell3(A.add(a, b), u));
            }
            for (int v = 0; v < nu; ++v)
                C.set(Op::comp2, cell3(a, v), g, cell3(a, U.add(u, v)));
        }
    C.finalize();
    return C;
}

void complete_by_units(FiniteGrayCategory& C)
{
    C.finalize();
    // identity_of[d][e] = the (d-1)-cell whose identity is the d-cell e.
    std::array<std::vector<int>, 4> identity_of;
    for (int d = 1; d <= 3; ++d) {
        identity_of[d].assign(C.count(d), -1);
        for (int i = 0; i < C.count(d - 1); ++i) {
            int e = C.identity_entry(d - 1, i);
            if (e >= 0)
                identity_of[d][e] = i;
        }
    }
    auto idof = [&](int d, int e) { return identity_of[d][e]; };
    auto get = [&](Op op, int a, int b) { return C.lookup(op, a, b); };
    auto idc = [&](int d, int i) { return i < 0 ? -1 : C.identity_entry(d, i); };

    bool changed = true;
    while (changed) {
        changed = false;
        for (Op op : all_ops()) {
            const OpShape& s = op_shape(op);
            for (int a = 0; a < C.count(s.left); ++a)
                for (int b = 0; b < C.count(s.right); ++b) {
                    if (!C.compatible(op, a, b) || C.lookup(op, a, b) >= 0)
                        continue;
                    int r = -1;
                    switch (op) {
                    case Op::comp0:
                        if (idof(1, a) >= 0)
                            r = b;
                        else if (idof(1, b) >= 0)
                            r = a;
                        break;
                    case Op::whisk_1on2:
                    case Op::whisk_1on3:
                        if (idof(1, a) >= 0)
                            r = b;
                        else if (idof(s.right, b) >= 0) {
                            Op low = op == Op::whisk_1on2 ? Op::comp0 : Op::whisk_1on2;
                            int x = get(low, a, idof(s.right, b));
                            r = idc(s.right - 1, x);
                        }
                        break;
                    case Op::whisk_2on1:
                    case Op::whisk_3on1:
                        if (idof(1, b) >= 0)
                            r = a;
                        else if (idof(s.left, a) >= 0) {
                            Op low = op == Op::whisk_2on1 ? Op::comp0 : Op::whisk_2on1;
                            int x = get(low, idof(s.left, a), b);
                            r = idc(s.left - 1, x);
                        }
                        break;
                    case Op::comp1:
                    case Op::comp2:
                        if (idof(s.left, a) >= 0)
                            r = b;
                        else if (idof(s.right, b) >= 0)
                            r = a;
                        break;
                    case Op::whisk_2on3:
                        if (idof(2, a) >= 0)
                            r = b;
                        else if (idof(3, b) >= 0)
                            r = idc(2, get(Op::comp1, a, idof(3, b)));
                        break;
                    case Op::whisk_3on2:
                        if (idof(2, b) >= 0)
                            r = a;
                        else if (idof(3, a) >= 0)
                            r = idc(2, get(Op::comp1, idof(3, a), b));
                        break;
                    case Op::tensor:
                        if (idof(2, a) >= 0)
                            r = idc(2, get(Op::whisk_1on2, idof(2, a), b));
                        else if (idof(2, b) >= 0)
                            r = idc(2, get(Op::whisk_2on1, a, idof(2, b)));
                        break;
                    }
                    if (r >= 0) {
                        C.set(op, a, b, r);
                        changed = true;
                    }
                }
        }
    }
    C.finalize();
}

namespace {

// Adds identity cells above every cell that lacks one.
void add_identities(FiniteGrayCategory& C)
{
    for (int d = 0; d <= 2; ++d) {
        const int n = C.count(d);
        for (int i = 0; i < n; ++i) {
            if (C.identity_entry(d, i) >= 0)
                continue;
            int e = C.add_cell(d + 1, "id(" + C.label(d, i) + ")", i, i);
            C.set_identity(d, i, e);
        }
    }
}

using Perm = std::array<int, 3>;

std::vector<Perm> s3_elements()
{
    std::vector<Perm> out;
    Perm p{0, 1, 2};
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string perm_label(const Perm& p) { return std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]); }

int perm_sign(const Perm& p)
{
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[i] > p[j])
                ++inv;
    return inv % 2;
}

struct S3 {
    std::vector<Perm> el = s3_elements();
    std::map<Perm, int> index;
    S3()
    {
        for (std::size_t i = 0; i < el.size(); ++i)
            index[el[i]] = static_cast<int>(i);
    }
    // (p . q)(i) = p(q(i))
    int mul(int p, int q) const
    {
        Perm r;
        for (int i = 0; i < 3; ++i)
            r[i] = el[p][el[q][i]];
        return index.at(r);
    }
    int size() const { return static_cast<int>(el.size()); }
};

} // namespace

FiniteGrayCategory build_walking(int k)
{
    if (k < 0 || k > 3)
        throw std::invalid_argument("walking cell dimension must be in 0..3");
    FiniteGrayCategory C("walking" + std::to_string(k));
    C.add_cell(0, "x");
    if (k >= 1)
        C.add_cell(0, "y");
    if (k == 1)
        C.add_cell(1, "f", 0, 1);
    if (k >= 2) {
        C.add_cell(1, "f", 0, 1);
        C.add_cell(1, "f'", 0, 1);
    }
    if (k == 2)
        C.add_cell(2, "phi", 0, 1);
    if (k == 3) {
        C.add_cell(2, "phi", 0, 1);
        C.add_cell(2, "phi'", 0, 1);
        C.add_cell(3, "Gamma", 0, 1);
    }
    add_identities(C);
    complete_by_units(C);
    return C;
}

FiniteGrayCategory build_chain(int n)
{
    if (n < 0)
        throw std::invalid_argument("chain length must be nonnegative");
    FiniteGrayCategory C("chain" + std::to_string(n));
    for (int i = 0; i <= n; ++i)
        C.add_cell(0, std::to_string(i));
    std::map<std::pair<int, int>, int> arrow;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            arrow[{i, j}] = C.add_cell(1, "f" + std::to_string(i) + std::to_string(j), i, j);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                C.set(Op::comp0, arrow[{j, k}], arrow[{i, j}], arrow[{i, k}]);
    add_identities(C);
    complete_by_units(C);
    return C;
}

FiniteGrayCategory build_thin_s3()
{
    S3 G;
    const int n = G.size();
    FiniteGrayCategory C("thinS3");
    C.add_cell(0, "*");
    C.add_cell(1, "e", 0, 0);
    C.set_identity(0, 0, 0);
    for (int a = 0; a < n; ++a)
        C.add_cell(2, perm_label(G.el[a]), 0, 0);
    const int unit = G.index.at(Perm{0, 1, 2});
    C.set_identity(1, 0, unit);
    std::map<std::pair<int, int>, int> three;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (perm_sign(G.el[a]) == perm_sign(G.el[b]))
                three[{a, b}] = C.add_cell(3, "[" + perm_label(G.el[a]) + "," + perm_label(G.el[b]) + "]", a, b);
    for (int a = 0; a < n; ++a)
        C.set_identity(2, a, three.at({a, a}));

    C.set(Op::comp0, 0, 0, 0);
    for (int a = 0; a < n; ++a) {
        C.set(Op::whisk_1on2, 0, a, a);
        C.set(Op::whisk_2on1, a, 0, a);
        for (int b = 0; b < n; ++b) {
            C.set(Op::comp1, b, a, G.mul(b, a));
            // source phi #1 psi = phi.psi, target psi #1 phi = psi.phi
            C.set(Op::tensor, b, a, three.at({G.mul(a, b), G.mul(b, a)}));
        }
    }
    for (const auto& [ab, g] : three) {
        const auto [a, b] = ab;
        C.set(Op::whisk_1on3, 0, g, g);
        C.set(Op::whisk_3on1, g, 0, g);
        for (int p = 0; p < n; ++p) {
            C.set(Op::whisk_2on3, p, g, three.at({G.mul(p, a), G.mul(p, b)}));
            C.set(Op::whisk_3on2, g, p, three.at({G.mul(a, p), G.mul(b, p)}));
        }
        for (int c = 0; c < n; ++c)
            if (three.count({b, c}))
                C.set(Op::comp2, three.at({b, c}), g, three.at({a, c}));
    }
    C.finalize();
    return C;
}

FiniteGrayCategory build_codiscrete_s3()
{
    S3 G;
    const int n = G.size();
    FiniteGrayCategory C("codiscreteS3");
    C.add_cell(0, "*");
    for (int a = 0; a < n; ++a)
        C.add_cell(1, perm_label(G.el[a]), 0, 0);
    C.set_identity(0, 0, G.index.at(Perm{0, 1, 2}));
    auto two = [&](int a, int b) { return a * n + b; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            C.add_cell(2, perm_label(G.el[a]) + ">" + perm_label(G.el[b]), a, b);
    for (int a = 0; a < n; ++a)
        C.set_identity(1, a, two(a, a));
    for (int p = 0; p < n * n; ++p) {
        int e = C.add_cell(3, "id(" + C.label(2, p) + ")", p, p);
        C.set_identity(2, p, e);
    }
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f)
            C.set(Op::comp0, g, f, G.mul(g, f));
    for (int g = 0; g < n; ++g)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                C.set(Op::whisk_1on2, g, two(a, b), two(G.mul(g, a), G.mul(g, b)));
                C.set(Op::whisk_2on1, two(a, b), g, two(G.mul(a, g), G.mul(b, g)));
                C.set(Op::whisk_1on3, g, two(a, b), two(G.mul(g, a), G.mul(g, b)));
                C.set(Op::whisk_3on1, two(a, b), g, two(G.mul(a, g), G.mul(b, g)));
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                C.set(Op::comp1, two(b, c), two(a, b), two(a, c));
                C.set(Op::whisk_2on3, two(b, c), two(a, b), two(a, c));
                C.set(Op::whisk_3on2, two(b, c), two(a, b), two(a, c));
            }
    for (int p = 0; p < n * n; ++p)
        C.set(Op::comp2, p, p, p);
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp)
            for (int f = 0; f < n; ++f)
                for (int fp = 0; fp < n; ++fp)
                    C.set(Op::tensor, two(g, gp), two(f, fp), two(G.mul(g, f), G.mul(gp, fp)));
    C.finalize();
    return C;
}

FiniteGrayCategory bc_z2(bool braided)
{
    auto A = AbelianGroup::cyclic(2);
    auto c = braided ? bicharacter_from(A, A, [](int b, int a) { return a * b; })
                     : bicharacter_from(A, A, [](int, int) { return 0; });
    return build_bicharacter_gray(A, A, c, braided ? "BC" : "BC0");
}

FiniteGrayCategory bc_z4()
{
    auto A = AbelianGroup::cyclic(4);
    return build_bicharacter_gray(A, A, bicharacter_from(A, A, [](int b, int a) { return a * b; }), "BC4");
}

} // namespace graycat
