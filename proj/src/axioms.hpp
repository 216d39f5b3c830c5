#pragma once

#include "graycat/transfor.hpp"

#include <utility>

namespace graycat::detail {

// Both sides of the cocycle compatibility of a modification at the
// composable pair (f2, f1), with `slot` standing in for A_{f2 #0 f1}.
std::pair<Cell, Cell> psmod_cocycle_sides(const PseudoModification& A, int f2, int f1, Cell slot);

} // namespace graycat::detail
