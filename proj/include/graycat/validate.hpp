#pragma once

#include "graycat/core.hpp"
#include "graycat/report.hpp"

#include <optional>

namespace graycat {

// Throws StructuralError when an id, boundary or table entry dangles.
void check_structure(const FiniteGrayCategory& C);

// Exhaustive check of the Gray-category axioms over all incident tuples.
ValidationReport validate_gray_category(const FiniteGrayCategory& C, Exec ex = Exec::parallel);

// Table lookups with typing. `op` must be comp0, comp1 or comp2 for compose.
Cell compose(const FiniteGrayCategory& C, Op op, Cell left, Cell right);
// Arguments follow the table's order, e.g. (g, phi) for whisk_1on2.
Cell whisker(const FiniteGrayCategory& C, Op kind, Cell left, Cell right);
Cell tensor(const FiniteGrayCategory& C, Cell psi, Cell phi);
Cell identity(const FiniteGrayCategory& C, Cell c);
std::optional<Cell> inverse(const FiniteGrayCategory& C, Cell c);

} // namespace graycat
