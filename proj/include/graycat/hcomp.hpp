#pragma once

#include "graycat/hom.hpp"

#include <variant>

namespace graycat {

// A cell of a mapping space [C, D]: rank 0..3 is functor, transformation,
// modification, perturbation.
struct HCell {
    std::variant<GrayFunctor, PseudoTransformation, PseudoModification, Perturbation> v;

    int rank() const { return static_cast<int>(v.index()); }
    CatPtr source_cat() const;
    CatPtr target_cat() const;
    // The cell one rank down that this one starts from; throws on functors.
    HCell lower() const;

    bool operator==(const HCell& o) const = default;
};

ValidationReport validate(const HCell& x, Exec ex = Exec::parallel);
const char* kind_name(int rank);

// Horizontal composition left *-1 right, for left over (H, K) and right over (G, H).
GrayFunctor hcomp(const GrayFunctor& H, const GrayFunctor& G);
PseudoTransformation hcomp(const GrayFunctor& H, const PseudoTransformation& alpha);
PseudoModification hcomp(const GrayFunctor& H, const PseudoModification& A);
Perturbation hcomp(const GrayFunctor& H, const Perturbation& P);
PseudoTransformation hcomp(const PseudoTransformation& beta, const GrayFunctor& G);
PseudoModification hcomp(const PseudoModification& B, const GrayFunctor& G);
Perturbation hcomp(const Perturbation& D, const GrayFunctor& G);
// beta *-1 alpha : rhc(beta, alpha) => lhc(beta, alpha).
PseudoModification hcomp(const PseudoTransformation& beta, const PseudoTransformation& alpha);
Perturbation hcomp(const PseudoTransformation& beta, const PseudoModification& A);
Perturbation hcomp(const PseudoModification& B, const PseudoTransformation& alpha);
// All sixteen rank combinations. When the ranks add up to 4 or more the
// result is the identity perturbation on the rank-2 composite reached by
// replacing arguments with their sources, the left one first on ties.
HCell hcomp(const HCell& left, const HCell& right);

// beta <| alpha = (beta *-1 G') *0 (H *-1 alpha), written out componentwise.
PseudoTransformation lhc(const PseudoTransformation& beta, const PseudoTransformation& alpha);
// beta |> alpha = (H' *-1 alpha) *0 (beta *-1 G), written out componentwise.
PseudoTransformation rhc(const PseudoTransformation& beta, const PseudoTransformation& alpha);

// lhc and rhc against their *0 expansions.
ValidationReport check_one_sided(const PseudoTransformation& beta, const PseudoTransformation& alpha);
ValidationReport check_hcomp_modification(const PseudoTransformation& beta, const PseudoTransformation& alpha);
ValidationReport check_pasteunit(const PseudoTransformation& beta, const GrayFunctor& G);
ValidationReport check_interchange(const PseudoTransformation& beta2, const PseudoTransformation& beta1,
                                   const PseudoTransformation& alpha);
// Rank-3 composites (beta, A), (B, alpha), (H, Gamma), (Delta, G).
ValidationReport check_hcomp_perturbations(const HCell& x, const HCell& y);
// Rank law and validator of the result, for any pair.
ValidationReport check_hcomp_typing(const HCell& x, const HCell& y);

// The composable-pair entries of H *-1 A and B *-1 G that the tables leave
// in doubt: `printed` puts the component at the first 1-cell f of a pair
// (f', f) into the cocycle slot, `composite` the component at f' #0 f.
enum class PairEntry { printed, composite };
ValidationReport check_pair_entry(const HCell& x, const HCell& y, PairEntry choice);
// Runs both choices and records which one passes in the notes. Violations
// are those of the composite choice, which is the one hcomp implements.
ValidationReport resolve_pair_entries(const HCell& x, const HCell& y);

} // namespace graycat
