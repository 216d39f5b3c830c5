#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace graycat {

// A cell reference: dimension plus index into that dimension's cell list.
struct Cell {
    int dim = -1;
    int idx = -1;

    bool valid() const { return dim >= 0 && idx >= 0; }
    auto operator<=>(const Cell&) const = default;
};

class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TypingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ClosureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SizeBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The binary operation tables of a finite Gray-category.
enum class Op : int {
    comp0 = 0,   // g #0 f            C1 x C1 -> C1
    whisk_1on2,  // g #0 phi          C1 x C2 -> C2
    whisk_2on1,  // psi #0 f          C2 x C1 -> C2
    whisk_1on3,  // g #0 Gamma        C1 x C3 -> C3
    whisk_3on1,  // Delta #0 f        C3 x C1 -> C3
    comp1,       // psi #1 phi        C2 x C2 -> C2
    whisk_2on3,  // phi #1 Delta      C2 x C3 -> C3
    whisk_3on2,  // Gamma #1 psi      C3 x C2 -> C3
    comp2,       // Delta #2 Gamma    C3 x C3 -> C3
    tensor,      // psi (x) phi       C2 x C2 -> C3
};

inline constexpr int kOpCount = 10;

struct OpShape {
    int left;
    int right;
    int result;
    const char* name;
};

const OpShape& op_shape(Op op);
std::optional<Op> op_from_name(std::string_view name);
const std::array<Op, kOpCount>& all_ops();

// Partial map over pairs of cell indices.
class Table {
public:
    int get(int a, int b) const
    {
        auto it = data_.find(key(a, b));
        return it == data_.end() ? -1 : it->second;
    }
    void set(int a, int b, int c) { data_[key(a, b)] = c; }
    bool erase(int a, int b) { return data_.erase(key(a, b)) > 0; }
    std::size_t size() const { return data_.size(); }

    struct Entry {
        int a, b, c;
    };
    // Entries sorted by (a, b).
    std::vector<Entry> entries() const;

private:
    static std::uint64_t key(int a, int b)
    {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }
    std::unordered_map<std::uint64_t, int> data_;
};

class FiniteGrayCategory {
public:
    FiniteGrayCategory() = default;
    explicit FiniteGrayCategory(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    // ---- construction -------------------------------------------------
    int add_cell(int dim, const std::string& label, int src = -1, int tgt = -1);
    void set_identity(int dim, int cell, int id_cell);
    void set(Op op, int a, int b, int c) { tables_[static_cast<int>(op)].set(a, b, c); }
    void unset(Op op, int a, int b) { tables_[static_cast<int>(op)].erase(a, b); }
    void set_inverse(int dim, int cell, int inv);
    void clear_inverse(int dim, int cell);
    void clear_identity(int dim, int cell);
    // Rebuilds incidence indexes; call once construction is finished.
    void finalize();

    // ---- cells --------------------------------------------------------
    int count(int dim) const { return static_cast<int>(labels_[dim].size()); }
    const std::string& label(int dim, int i) const { return labels_[dim].at(i); }
    const std::string& label(Cell c) const { return label(c.dim, c.idx); }
    std::optional<int> find(int dim, std::string_view label) const;
    int src(int dim, int i) const { return src_[dim].at(i); }
    int tgt(int dim, int i) const { return tgt_[dim].at(i); }
    Cell src(Cell c) const;
    Cell tgt(Cell c) const;
    // 0-dimensional boundary of a cell of any dimension >= 1.
    int src0(Cell c) const;
    int tgt0(Cell c) const;

    // Cells of dimension dim whose source (resp. target) is the (dim-1)-cell b.
    const std::vector<int>& with_src(int dim, int b) const;
    const std::vector<int>& with_tgt(int dim, int b) const;

    // ---- raw tables (-1 when absent) ------------------------------------
    int lookup(Op op, int a, int b) const { return tables_[static_cast<int>(op)].get(a, b); }
    const Table& table(Op op) const { return tables_[static_cast<int>(op)]; }
    int identity_entry(int dim, int i) const;
    int stored_inverse(int dim, int i) const;
    bool is_identity(int dim, int i) const;

    // ---- typed operations (throw TypingError / ClosureError) -----------
    // Whether (a, b) is boundary compatible for op.
    bool compatible(Op op, int a, int b) const;
    int apply(Op op, int a, int b) const;
    int id(int dim, int i) const;
    Cell id(Cell c) const { return {c.dim + 1, id(c.dim, c.idx)}; }
    std::optional<int> inverse(int dim, int i) const;
    Cell inv(Cell c) const;

    // Forced boundary of op(a, b), computed from the other tables.
    std::pair<int, int> forced_boundary(Op op, int a, int b) const;

    // ---- pasting helpers over Cell -------------------------------------
    // a #0 b for dims (1,1), (1,2), (2,1), (1,3), (3,1).
    Cell h0(Cell a, Cell b) const;
    template <typename... Rest>
    Cell h0(Cell a, Cell b, Cell c, Rest... rest) const
    {
        return h0(a, h0(b, c, rest...));
    }
    // a #1 b for dims (2,2), (2,3), (3,2), and (3,3) as the horizontal
    // composite (a #1 tgt b) #2 (src a #1 b).
    Cell h1(Cell a, Cell b) const;
    template <typename... Rest>
    Cell h1(Cell a, Cell b, Cell c, Rest... rest) const
    {
        return h1(a, h1(b, c, rest...));
    }
    Cell h2(Cell a, Cell b) const;
    template <typename... Rest>
    Cell h2(Cell a, Cell b, Cell c, Rest... rest) const
    {
        return h2(a, h2(b, c, rest...));
    }
    Cell tens(Cell psi, Cell phi) const;

    std::string describe(Cell c) const;

private:
    [[noreturn]] void typing(const std::string& what, Cell a, Cell b) const;

    std::string name_;
    std::array<std::vector<std::string>, 4> labels_;
    std::array<std::vector<int>, 4> src_, tgt_;
    std::array<std::vector<int>, 3> id_;
    std::array<std::vector<int>, 4> inv_;
    std::array<Table, kOpCount> tables_;
    std::array<std::unordered_map<std::string, int>, 4> index_;
    std::array<std::vector<std::vector<int>>, 4> by_src_, by_tgt_;
    std::array<std::vector<char>, 4> is_id_;
};

using CatPtr = std::shared_ptr<const FiniteGrayCategory>;

} // namespace graycat
