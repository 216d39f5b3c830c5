#include "graycat/core.hpp"

#include <algorithm>
#include <sstream>

namespace graycat {

namespace {

const std::array<OpShape, kOpCount> kShapes = {{
    {1, 1, 1, "comp0"},
    {1, 2, 2, "whisk_1on2"},
    {2, 1, 2, "whisk_2on1"},
    {1, 3, 3, "whisk_1on3"},
    {3, 1, 3, "whisk_3on1"},
    {2, 2, 2, "comp1"},
    {2, 3, 3, "whisk_2on3"},
    {3, 2, 3, "whisk_3on2"},
    {3, 3, 3, "comp2"},
    {2, 2, 3, "tensor"},
}};

const std::array<Op, kOpCount> kOps = {Op::comp0,      Op::whisk_1on2, Op::whisk_2on1, Op::whisk_1on3,
                                       Op::whisk_3on1, Op::comp1,      Op::whisk_2on3, Op::whisk_3on2,
                                       Op::comp2,      Op::tensor};

const std::vector<int> kEmpty;

} // namespace

const OpShape& op_shape(Op op) { return kShapes[static_cast<int>(op)]; }

const std::array<Op, kOpCount>& all_ops() { return kOps; }

std::optional<Op> op_from_name(std::string_view name)
{
    for (Op op : kOps)
        if (name == op_shape(op).name)
            return op;
    return std::nullopt;
}

std::vector<Table::Entry> Table::entries() const
{
    std::vector<Entry> out;
    out.reserve(data_.size());
    for (const auto& [k, v] : data_)
        out.push_back({static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v});
    std::sort(out.begin(), out.end(),
              [](const Entry& x, const Entry& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return out;
}

int FiniteGrayCategory::add_cell(int dim, const std::string& label, int src, int tgt)
{
    if (dim < 0 || dim > 3)
        throw StructuralError("cell dimension out of range for '" + label + "'");
    if (index_[dim].count(label))
        throw StructuralError("duplicate " + std::to_string(dim) + "-cell id '" + label + "'");
    if (dim == 0 && (src >= 0 || tgt >= 0))
        throw StructuralError("0-cell '" + label + "' cannot have a boundary");
    int i = count(dim);
    labels_[dim].push_back(label);
    src_[dim].push_back(src);
    tgt_[dim].push_back(tgt);
    index_[dim].emplace(label, i);
    if (dim < 3)
        id_[dim].push_back(-1);
    inv_[dim].push_back(-1);
    return i;
}

void FiniteGrayCategory::set_identity(int dim, int cell, int id_cell)
{
    if (dim < 0 || dim > 2)
        throw TypingError("no identity above top dimension");
    id_[dim].at(cell) = id_cell;
}

void FiniteGrayCategory::clear_identity(int dim, int cell) { id_[dim].at(cell) = -1; }

void FiniteGrayCategory::set_inverse(int dim, int cell, int inv) { inv_[dim].at(cell) = inv; }

void FiniteGrayCategory::clear_inverse(int dim, int cell) { inv_[dim].at(cell) = -1; }

std::optional<int> FiniteGrayCategory::find(int dim, std::string_view label) const
{
    auto it = index_[dim].find(std::string(label));
    if (it == index_[dim].end())
        return std::nullopt;
    return it->second;
}

Cell FiniteGrayCategory::src(Cell c) const
{
    if (c.dim < 1)
        throw TypingError("0-cells have no source");
    return {c.dim - 1, src(c.dim, c.idx)};
}

Cell FiniteGrayCategory::tgt(Cell c) const
{
    if (c.dim < 1)
        throw TypingError("0-cells have no target");
    return {c.dim - 1, tgt(c.dim, c.idx)};
}

int FiniteGrayCategory::src0(Cell c) const
{
    while (c.dim > 1)
        c = src(c);
    return src(1, c.idx);
}

int FiniteGrayCategory::tgt0(Cell c) const
{
    while (c.dim > 1)
        c = src(c);
    return tgt(1, c.idx);
}

const std::vector<int>& FiniteGrayCategory::with_src(int dim, int b) const
{
    if (dim < 1 || b < 0 || b >= static_cast<int>(by_src_[dim].size()))
        return kEmpty;
    return by_src_[dim][b];
}

const std::vector<int>& FiniteGrayCategory::with_tgt(int dim, int b) const
{
    if (dim < 1 || b < 0 || b >= static_cast<int>(by_tgt_[dim].size()))
        return kEmpty;
    return by_tgt_[dim][b];
}

int FiniteGrayCategory::identity_entry(int dim, int i) const
{
    if (dim < 0 || dim > 2)
        return -1;
    return id_[dim].at(i);
}

int FiniteGrayCategory::stored_inverse(int dim, int i) const { return inv_[dim].at(i); }

bool FiniteGrayCategory::is_identity(int dim, int i) const
{
    if (dim < 1 || i < 0 || i >= static_cast<int>(is_id_[dim].size()))
        return false;
    return is_id_[dim][i] != 0;
}

void FiniteGrayCategory::finalize()
{
    for (int d = 1; d <= 3; ++d) {
        by_src_[d].assign(count(d - 1), {});
        by_tgt_[d].assign(count(d - 1), {});
        for (int i = 0; i < count(d); ++i) {
            int s = src_[d][i], t = tgt_[d][i];
            if (s >= 0 && s < count(d - 1))
                by_src_[d][s].push_back(i);
            if (t >= 0 && t < count(d - 1))
                by_tgt_[d][t].push_back(i);
        }
    }
    for (int d = 0; d < 4; ++d)
        is_id_[d].assign(count(d), 0);
    for (int d = 0; d < 3; ++d)
        for (int i = 0; i < count(d); ++i) {
            int e = id_[d][i];
            if (e >= 0 && e < count(d + 1))
                is_id_[d + 1][e] = 1;
        }
}

bool FiniteGrayCategory::compatible(Op op, int a, int b) const
{
    const OpShape& s = op_shape(op);
    if (a < 0 || b < 0 || a >= count(s.left) || b >= count(s.right))
        return false;
    switch (op) {
    case Op::comp0:
        return src(1, a) == tgt(1, b);
    case Op::whisk_1on2:
    case Op::whisk_1on3:
        return src(1, a) == tgt0({s.right, b});
    case Op::whisk_2on1:
    case Op::whisk_3on1:
        return src0({s.left, a}) == tgt(1, b);
    case Op::comp1:
        return src(2, a) == tgt(2, b);
    case Op::whisk_2on3:
        return src(2, a) == tgt(2, src(3, b));
    case Op::whisk_3on2:
        return src(2, src(3, a)) == tgt(2, b);
    case Op::comp2:
        return src(3, a) == tgt(3, b);
    case Op::tensor:
        return src0({2, a}) == tgt0({2, b});
    }
    return false;
}

void FiniteGrayCategory::typing(const std::string& what, Cell a, Cell b) const
{
    throw TypingError(what + ": " + describe(a) + " and " + describe(b) + " are not incident");
}

int FiniteGrayCategory::apply(Op op, int a, int b) const
{
    const OpShape& s = op_shape(op);
    if (!compatible(op, a, b))
        typing(s.name, {s.left, a}, {s.right, b});
    int r = lookup(op, a, b);
    if (r < 0)
        throw ClosureError(std::string(s.name) + "(" + label(s.left, a) + ", " + label(s.right, b) +
                           ") has no table entry");
    return r;
}

int FiniteGrayCategory::id(int dim, int i) const
{
    if (dim < 0 || dim > 2)
        throw TypingError("no identity above top dimension");
    int r = id_[dim].at(i);
    if (r < 0)
        throw ClosureError("missing identity on " + describe({dim, i}));
    return r;
}

std::optional<int> FiniteGrayCategory::inverse(int dim, int i) const
{
    if (dim != 2 && dim != 3)
        return std::nullopt;
    if (inv_[dim][i] >= 0)
        return inv_[dim][i];
    const Op comp = dim == 2 ? Op::comp1 : Op::comp2;
    const int s = src(dim, i), t = tgt(dim, i);
    const int ids = id_[dim - 1][s], idt = id_[dim - 1][t];
    if (ids < 0 || idt < 0)
        return std::nullopt;
    for (int j : with_src(dim, t)) {
        if (tgt(dim, j) != s)
            continue;
        if (lookup(comp, j, i) == ids && lookup(comp, i, j) == idt)
            return j;
    }
    return std::nullopt;
}

Cell FiniteGrayCategory::inv(Cell c) const
{
    auto r = inverse(c.dim, c.idx);
    if (!r)
        throw ClosureError(describe(c) + " has no inverse");
    return {c.dim, *r};
}

std::pair<int, int> FiniteGrayCategory::forced_boundary(Op op, int a, int b) const
{
    switch (op) {
    case Op::comp0:
        return {src(1, b), tgt(1, a)};
    case Op::whisk_1on2:
        return {apply(Op::comp0, a, src(2, b)), apply(Op::comp0, a, tgt(2, b))};
    case Op::whisk_2on1:
        return {apply(Op::comp0, src(2, a), b), apply(Op::comp0, tgt(2, a), b)};
    case Op::whisk_1on3:
        return {apply(Op::whisk_1on2, a, src(3, b)), apply(Op::whisk_1on2, a, tgt(3, b))};
    case Op::whisk_3on1:
        return {apply(Op::whisk_2on1, src(3, a), b), apply(Op::whisk_2on1, tgt(3, a), b)};
    case Op::comp1:
        return {src(2, b), tgt(2, a)};
    case Op::whisk_2on3:
        return {apply(Op::comp1, a, src(3, b)), apply(Op::comp1, a, tgt(3, b))};
    case Op::whisk_3on2:
        return {apply(Op::comp1, src(3, a), b), apply(Op::comp1, tgt(3, a), b)};
    case Op::comp2:
        return {src(3, b), tgt(3, a)};
    case Op::tensor: {
        int s = apply(Op::comp1, apply(Op::whisk_1on2, tgt(2, a), b), apply(Op::whisk_2on1, a, src(2, b)));
        int t = apply(Op::comp1, apply(Op::whisk_2on1, a, tgt(2, b)), apply(Op::whisk_1on2, src(2, a), b));
        return {s, t};
    }
    }
    return {-1, -1};
}

Cell FiniteGrayCategory::h0(Cell a, Cell b) const
{
    Op op;
    if (a.dim == 1 && b.dim == 1)
        op = Op::comp0;
    else if (a.dim == 1 && b.dim == 2)
        op = Op::whisk_1on2;
    else if (a.dim == 2 && b.dim == 1)
        op = Op::whisk_2on1;
    else if (a.dim == 1 && b.dim == 3)
        op = Op::whisk_1on3;
    else if (a.dim == 3 && b.dim == 1)
        op = Op::whisk_3on1;
    else
        typing("#0", a, b);
    return {op_shape(op).result, apply(op, a.idx, b.idx)};
}

Cell FiniteGrayCategory::h1(Cell a, Cell b) const
{
    if (a.dim == 2 && b.dim == 2)
        return {2, apply(Op::comp1, a.idx, b.idx)};
    if (a.dim == 2 && b.dim == 3)
        return {3, apply(Op::whisk_2on3, a.idx, b.idx)};
    if (a.dim == 3 && b.dim == 2)
        return {3, apply(Op::whisk_3on2, a.idx, b.idx)};
    if (a.dim == 3 && b.dim == 3) {
        if (src(2, src(3, a.idx)) != tgt(2, src(3, b.idx)))
            typing("#1", a, b);
        Cell left = h1(a, tgt(b));
        Cell right = h1(src(a), b);
        return h2(left, right);
    }
    typing("#1", a, b);
}

Cell FiniteGrayCategory::h2(Cell a, Cell b) const
{
    if (a.dim != 3 || b.dim != 3)
        typing("#2", a, b);
    return {3, apply(Op::comp2, a.idx, b.idx)};
}

Cell FiniteGrayCategory::tens(Cell psi, Cell phi) const
{
    if (psi.dim != 2 || phi.dim != 2)
        typing("tensor", psi, phi);
    return {3, apply(Op::tensor, psi.idx, phi.idx)};
}

std::string FiniteGrayCategory::describe(Cell c) const
{
    std::ostringstream os;
    os << c.dim << "-cell ";
    if (c.dim >= 0 && c.dim <= 3 && c.idx >= 0 && c.idx < count(c.dim))
        os << label(c);
    else
        os << "#" << c.idx;
    return os.str();
}

} // namespace graycat
