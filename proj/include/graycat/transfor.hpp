#pragma once

#include "graycat/functor.hpp"

#include <vector>

namespace graycat {

// alpha : F => G.  alpha_f runs from Gf #0 alpha_x to alpha_y #0 Ff.
struct PseudoTransformation {
    GrayFunctor dom, cod;
    std::vector<int> at0; // 0-cells -> 1-cells
    std::vector<int> at1; // 1-cells -> 2-cells
    std::vector<int> at2; // 2-cells -> 3-cells
    std::vector<int> coc; // coc[f2 * n1 + f1] for composable f2 #0 f1, else -1

    const FiniteGrayCategory& source() const { return *dom.dom; }
    const FiniteGrayCategory& target() const { return *dom.cod; }

    Cell x(int obj) const { return {1, at0.at(obj)}; }
    Cell f(int one) const { return {2, at1.at(one)}; }
    Cell phi(int two) const { return {3, at2.at(two)}; }
    Cell c(int f2, int f1) const;

    bool operator==(const PseudoTransformation& o) const = default;
};

// A : alpha => beta.  A_f runs from beta_f #1 (Gf #0 A_x) to (A_y #0 Ff) #1 alpha_f.
struct PseudoModification {
    PseudoTransformation dom, cod;
    std::vector<int> at0; // 0-cells -> 2-cells
    std::vector<int> at1; // 1-cells -> 3-cells

    const FiniteGrayCategory& source() const { return dom.source(); }
    const FiniteGrayCategory& target() const { return dom.target(); }

    Cell x(int obj) const { return {2, at0.at(obj)}; }
    Cell f(int one) const { return {3, at1.at(one)}; }

    bool operator==(const PseudoModification& o) const = default;
};

// Gamma : A => B, with Gamma_x : A_x => B_x.
struct Perturbation {
    PseudoModification dom, cod;
    std::vector<int> at0; // 0-cells -> 3-cells

    const FiniteGrayCategory& source() const { return dom.source(); }
    const FiniteGrayCategory& target() const { return dom.target(); }

    Cell x(int obj) const { return {3, at0.at(obj)}; }

    bool operator==(const Perturbation& o) const = default;
};

ValidationReport validate_pstransf(const PseudoTransformation& a, Exec ex = Exec::parallel);
ValidationReport validate_psmod(const PseudoModification& A, Exec ex = Exec::parallel);
ValidationReport validate_perturbation(const Perturbation& G, Exec ex = Exec::parallel);

// Boundaries that the components at f, phi and (f2, f1) must have, given
// the lower components of a.
std::pair<Cell, Cell> at1_boundary(const PseudoTransformation& a, int f);
std::pair<Cell, Cell> at2_boundary(const PseudoTransformation& a, int phi);
std::pair<Cell, Cell> coc_boundary(const PseudoTransformation& a, int f2, int f1);

PseudoTransformation id_pstransf(const GrayFunctor& F);
PseudoModification id_psmod(const PseudoTransformation& a);
Perturbation id_pert(const PseudoModification& A);

// Brute-force enumerators. Results come in lexicographic order of the
// component assignments and all pass their validators.
std::vector<PseudoTransformation> enumerate_pstransf(const GrayFunctor& F, const GrayFunctor& G);
std::vector<PseudoModification> enumerate_psmod(const PseudoTransformation& a, const PseudoTransformation& b);
std::vector<Perturbation> enumerate_pert(const PseudoModification& A, const PseudoModification& B);

} // namespace graycat
