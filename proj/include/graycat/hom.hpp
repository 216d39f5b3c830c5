#pragma once

#include "graycat/transfor.hpp"

namespace graycat {

// beta2 *0 beta1 for beta1 : G => G' and beta2 : G' => G''.
PseudoTransformation comp0_pstransf(const PseudoTransformation& beta2, const PseudoTransformation& beta1);

// A2 *1 A1 for A1 : alpha => beta and A2 : beta => gamma.
PseudoModification comp1_psmod(const PseudoModification& A2, const PseudoModification& A1);

// beta *0 A : beta *0 alpha => beta *0 alpha', for A : alpha => alpha'.
PseudoModification whiskr_psmod(const PseudoTransformation& beta, const PseudoModification& A);

// B *0 alpha : beta *0 alpha => beta' *0 alpha, for B : beta => beta'.
PseudoModification whiskl_psmod(const PseudoModification& B, const PseudoTransformation& alpha);

// Perturbation operations, all componentwise.
Perturbation comp2_pert(const Perturbation& D2, const Perturbation& D1);
Perturbation whisk_pert(const PseudoTransformation& beta, const Perturbation& G); // beta *0 G
Perturbation whisk_pert(const Perturbation& G, const PseudoTransformation& alpha); // G *0 alpha
Perturbation whisk_pert(const PseudoModification& A, const Perturbation& G);      // A *1 G
Perturbation whisk_pert(const Perturbation& G, const PseudoModification& A);      // G *1 A

} // namespace graycat
