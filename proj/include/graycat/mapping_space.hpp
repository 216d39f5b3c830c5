#pragma once

#include "graycat/hcomp.hpp"

#include <map>
#include <string>
#include <vector>

namespace graycat {

// [G, H]: strict functors, pseudo-transformations, pseudo-modifications and
// perturbations as a finite Gray-category, plus the dictionary between its
// cells and their values.
struct MappingSpace {
    CatPtr dom, cod;
    CatPtr space;
    std::vector<GrayFunctor> functors;
    std::vector<PseudoTransformation> transfs;
    std::vector<PseudoModification> mods;
    std::vector<Perturbation> perts;
    // Largest number of perturbations sharing the boundary of a tensor cell.
    int tensor_multiplicity = 0;

    // Index of the value in the space, or -1.
    int find(const GrayFunctor& F) const;
    int find(const PseudoTransformation& a) const;
    int find(const PseudoModification& A) const;
    int find(const Perturbation& P) const;
    int find(const HCell& x) const;
    // Same, but throws ClosureError naming `what` when the value is absent.
    int at(const HCell& x, const std::string& what) const;
    HCell value(Cell c) const;

    std::map<std::vector<int>, int> index[4];
};

MappingSpace build_mapping_space(const CatPtr& G, const CatPtr& H);

// Every table entry of the space recomputed with the hom_calculus operations
// and every dictionary value re-validated.
ValidationReport check_dictionary(const MappingSpace& M);

// [D, K] -> [D, K'] acting by K *-1 (-).
GrayFunctor postcompose_map(const GrayFunctor& K, const MappingSpace& from, const MappingSpace& to);
// [G, H] -> [G', H] acting by (-) *-1 F for F : G' -> G.
GrayFunctor precompose_map(const GrayFunctor& F, const MappingSpace& from, const MappingSpace& to);

// L(x) for a cell x of [H, K], as a cell of the mapping space between
// X = [D, H] and Y = [D, K]. Components are looked up in Y; a missing value
// throws ClosureError.
HCell L_map(const HCell& x, const MappingSpace& X, const MappingSpace& Y);
// The perturbation L(beta)^2_{alpha', alpha} of Y, before lookup.
Perturbation L_cocycle(const PseudoTransformation& beta, const PseudoTransformation& alpha2,
                       const PseudoTransformation& alpha1);

// Every cell of Z = [H, K] has an L-image of its own rank that validates,
// and every L(beta)^2 component is a perturbation.
ValidationReport check_L_welldef(const MappingSpace& Z, const MappingSpace& X, const MappingSpace& Y);
ValidationReport check_L_homomorphism(const PseudoTransformation& beta2, const PseudoTransformation& beta1,
                                      const MappingSpace& X, const MappingSpace& Y);

// Candidate realizations of i and j: evaluation at the object of the
// terminal category, and the cell of the identity functor.
GrayFunctor eval_i(const MappingSpace& M);
int unit_j(const MappingSpace& M);

// i_{H'} o [1, K] = K o i_H, for K : H -> H'.
ValidationReport check_i_naturality(const GrayFunctor& K, const MappingSpace& from, const MappingSpace& to);
// [G, F](j_G) = [F, G'](j_G') as functors G -> G', for F : G -> G'.
ValidationReport check_j_extranaturality(const GrayFunctor& F, const MappingSpace& GG, const MappingSpace& G2G2,
                                         const MappingSpace& GG2);

} // namespace graycat
