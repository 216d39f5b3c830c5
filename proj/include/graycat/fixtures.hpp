#pragma once

#include "graycat/core.hpp"

#include <string>
#include <vector>

namespace graycat {

// Product of cyclic groups Z/n1 x ... x Z/nk; elements are mixed-radix indices.
struct AbelianGroup {
    std::vector<int> orders;

    int size() const;
    int add(int a, int b) const;
    int neg(int a) const;
    std::vector<int> digits(int a) const;
    int from_digits(const std::vector<int>& d) const;
    std::string label(int a) const;

    static AbelianGroup cyclic(int n) { return AbelianGroup{{n}}; }
    static AbelianGroup trivial() { return AbelianGroup{{}}; }
};

// c[b * |A| + a] is the U-element c(b, a).
using Bicharacter = std::vector<int>;

Bicharacter bicharacter_from(const AbelianGroup& A, const AbelianGroup& U, int (*fn)(int b, int a));

// One object, one 1-cell, 2-cells A, 3-cells A x U with tensor(b, a) = (a+b, c(b, a)).
// Throws std::invalid_argument naming a witness pair when c is not bilinear.
FiniteGrayCategory build_bicharacter_gray(const AbelianGroup& A, const AbelianGroup& U, const Bicharacter& c,
                                          const std::string& name = "BC");

// The free Gray-category on one k-cell, k in 0..3.
FiniteGrayCategory build_walking(int k);

// The free category on the path 0 -> 1 -> ... -> n, with identity higher cells.
FiniteGrayCategory build_chain(int n);

// One object and one 1-cell; 2-cells the symmetric group S3 under composition,
// one 3-cell a => b whenever a and b have the same sign. The interchanger
// psi (x) phi runs from phi.psi to psi.phi, so its boundary is sensitive to
// the order of every pasting.
FiniteGrayCategory build_thin_s3();

// One object; 1-cells S3, a unique 2-cell between any two 1-cells, identity 3-cells.
FiniteGrayCategory build_codiscrete_s3();

// Fills every table entry that the unit laws force. Pairs of non-identity
// cells are left alone.
void complete_by_units(FiniteGrayCategory& C);

// Frequently used fixtures.
FiniteGrayCategory bc_z2(bool braided = true);
FiniteGrayCategory bc_z4();

} // namespace graycat
