#pragma once

#include "graycat/mapping_space.hpp"

namespace graycat {

// Exhaustive runs of the horizontal-composition and L checks over the cells
// of enumerated mapping spaces GH = [G, H] and HK = [H, K]. Witnesses carry
// the cell labels of the spaces.

ValidationReport sweep_pasteunit(const MappingSpace& GH, const MappingSpace& HK, Exec ex = Exec::parallel);
// Composable beta1, beta2 in HK against every alpha in GH.
ValidationReport sweep_interchange(const MappingSpace& GH, const MappingSpace& HK, Exec ex = Exec::parallel);
// Rank law and result validity for every pair of cells, counted per rank case,
// plus the pair-entry resolution summarized in the notes.
ValidationReport sweep_hcomp_typing(const MappingSpace& GH, const MappingSpace& HK, Exec ex = Exec::parallel);
// beta *-1 alpha, beta *-1 A, B *-1 alpha and the one-sided composites.
ValidationReport sweep_hcomp_lemmas(const MappingSpace& GH, const MappingSpace& HK, Exec ex = Exec::parallel);

// L(beta') *0 L(beta) = L(beta' *0 beta) for composable transformations of Z.
ValidationReport sweep_L_homomorphism(const MappingSpace& Z, const MappingSpace& X, const MappingSpace& Y,
                                      Exec ex = Exec::parallel);
// Every K : H -> H', with from = [1, H] and to = [1, H'].
ValidationReport sweep_i_naturality(const MappingSpace& HH2, const MappingSpace& from, const MappingSpace& to);
// Every F : G -> G'.
ValidationReport sweep_j_extranaturality(const MappingSpace& GG2, const MappingSpace& GG, const MappingSpace& G2G2);

} // namespace graycat
