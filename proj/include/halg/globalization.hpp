#pragma once

#include "halg/coaction.hpp"

namespace halg {

/// A globalization triple for a partial module coalgebra: D carries a global
/// action, theta embeds C, pi projects D onto theta(C). The attached report
/// re-checks all structural hypotheses plus the three globalization axioms.
struct GlobalizationPMC {
  Coalgebra D;
  ActionMap act_global;
  LinearMap theta;  // D.dim x C.dim, injective coalgebra morphism
  LinearMap pi;     // D.dim x D.dim, comultiplicative projection onto theta(C)
  CheckReport report;
};

/// Structural hypotheses shared by the globalization verifier and its dual:
/// valid coalgebras, partial/global actions, theta an injective coalgebra
/// morphism, pi a comultiplicative projection onto the image of theta.
CheckReport globalization_hypotheses_pmc(const Coalgebra& c, const HopfAlgebra& h,
                                         const ActionMap& act, const Coalgebra& d,
                                         const ActionMap& act_global,
                                         const LinearMap& theta, const LinearMap& pi);

CheckReport verify_globalization_pmc(const Coalgebra& c, const HopfAlgebra& h,
                                     const ActionMap& act, const Coalgebra& d,
                                     const ActionMap& act_global,
                                     const LinearMap& theta, const LinearMap& pi);

/// D = C ⊗ H with the right-multiplication action, theta(c) = c⊗1, and
/// pi(c⊗h) = (c⇀h)⊗1. Always verifies for a valid partial action.
GlobalizationPMC standard_globalization_pmc(const Coalgebra& c, const HopfAlgebra& h,
                                            const ActionMap& act);

/// Dual picture of a globalization: phi embeds C* into D*, B is the
/// H-module algebra generated by phi(C*). The report carries the dual
/// globalization axioms evaluated independently of the primal ones.
struct DualGlobalization {
  LinearMap phi;            // D.dim x C.dim (coordinates of functionals)
  Subspace b_subalgebra;    // inside D*
  DualActionMap dstar_act;  // H acting on D*
  CheckReport report;
};

DualGlobalization dual_globalization(const Coalgebra& c, const HopfAlgebra& h,
                                     const ActionMap& act, const GlobalizationPMC& g);

/// For the standard globalization, compares the convolution algebra of
/// (C⊗H)* with the convolution-type algebra of maps H -> C* under the
/// adjoint identification, checks the two H-actions agree, and checks the
/// embedding of C* corresponds to the map alpha -> (h -> h ⇀ alpha).
CheckReport adjoint_psi_check(const Coalgebra& c, const HopfAlgebra& h,
                              const ActionMap& act, const GlobalizationPMC& g);

struct GlobalizationPCC {
  Coalgebra D;
  CoactionMap co_global;
  LinearMap theta;
  LinearMap pi;
  CheckReport report;
};

CheckReport verify_globalization_pcc(const Coalgebra& c, const HopfAlgebra& h,
                                     const CoactionMap& co, const Coalgebra& d,
                                     const CoactionMap& co_global,
                                     const LinearMap& theta, const LinearMap& pi);

/// Finite-dimensional standard globalization of a partial coaction:
/// D = C ⊗ H* with the dual-basis coaction, theta(c) = c⊗eps_H,
/// pi(c⊗f) = (c⇀f)⊗eps_H.
GlobalizationPCC standard_globalization_pcc(const Coalgebra& c, const HopfAlgebra& h,
                                            const CoactionMap& co);

/// The coaction on C ⊗ H* determines and is determined by the right
/// H*-multiplication: applying a functional to the first coaction leg must
/// equal acting with it. Requires the standard tensor shape.
CheckReport rationality_consistency_check(const Coalgebra& c, const HopfAlgebra& h,
                                          const CoactionMap& co_d);

/// A coaction globalization is also a globalization of the induced partial
/// action over the dual Hopf algebra; runs the module-coalgebra verifier on
/// the converted triple.
CheckReport cross_check_pcc_to_pmc(const Coalgebra& c, const HopfAlgebra& h,
                                   const CoactionMap& co, const GlobalizationPCC& g);

}  // namespace halg
