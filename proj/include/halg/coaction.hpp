#pragma once

#include "halg/action.hpp"

namespace halg {

/// Linear map C -> H⊗C with row-major pair index (h,c). Sweedler legs of the
/// image of c are written c^{-1} ⊗ c^{-0}.
struct CoactionMap {
  std::size_t h_dim = 0, c_dim = 0;
  LinearMap map;  // (h_dim*c_dim) x c_dim

  Vec col(std::size_t c) const { return map.col(c); }
};

/// The partiality-defect map C -> H, (I ⊗ eps_C) ∘ coaction. A coaction is
/// global exactly when this equals unit ∘ eps.
struct NablaMap {
  LinearMap map;  // h_dim x c_dim
};

void require_coaction_shapes(const Coalgebra& c, const HopfAlgebra& h,
                             const CoactionMap& co);

CheckReport check_comodule_coalgebra(const Coalgebra& d, const HopfAlgebra& h,
                                     const CoactionMap& co);
CheckReport check_counit_coaction(const Coalgebra& d, const HopfAlgebra& h,
                                  const CoactionMap& co);
NablaMap nabla(const CoactionMap& co, const Coalgebra& c);
CheckReport check_partial_comodule_coalgebra(const Coalgebra& c, const HopfAlgebra& h,
                                             const CoactionMap& co, bool symmetric);
/// The two absorption identities for nabla plus convolution idempotency.
CheckReport check_nabla_identities(const Coalgebra& c, const HopfAlgebra& h,
                                   const CoactionMap& co);

/// Nabla criterion for globality; also verified against the direct
/// comodule-coalgebra check. Throws NotPartialCoaction.
GlobalityResult is_global_coaction(const Coalgebra& c, const HopfAlgebra& h,
                                   const CoactionMap& co);

/// Coaction of H on the ground field determined by one element h: requires
/// eps(h) = 1 and h⊗h = (h⊗1)Delta(h). Throws ConditionsViolated listing the
/// failed condition with both sides.
CoactionMap idempotent_coaction_on_ground_field(const HopfAlgebra& h, const Vec& el);

/// c ⇀ f = f(c^{-1}) c^{-0}, an action of the dual Hopf algebra on C.
ActionMap coaction_to_action(const Coalgebra& c, const HopfAlgebra& h,
                             const CoactionMap& co);
/// (f ⇁ α)(c) = f(c^{-1}) α(c^{-0}), an action of the dual Hopf algebra on C*.
DualActionMap coaction_to_dual_action(const Coalgebra& c, const HopfAlgebra& h,
                                      const CoactionMap& co);
/// Dual-basis reconstruction of a coaction from an action of H* on C
/// (finite dimension only); inverse of coaction_to_action.
CoactionMap action_to_coaction(const Coalgebra& c, const ActionMap& act_over_dual,
                               const HopfAlgebra& h);

/// Builds all four partial structures attached to a partial coaction (the
/// coaction on C, the H*-action on C, the H*-action on C*, and the coaction
/// on C* reconstructed through the dual basis), runs their axiom suites and
/// the four compatibility identities linking them.
CheckReport check_four_way_equivalence(const Coalgebra& c, const HopfAlgebra& h,
                                       const CoactionMap& co);

/// Partial coaction c -> c^{-1} ⊗ proj(c^{-0}) induced by a comultiplicative
/// projection satisfying the coaction projection condition; hypotheses are
/// verified, failure carries a witness.
CoactionMap induce_partial_coaction(const Coalgebra& c, const Coalgebra& d,
                                    const HopfAlgebra& h, const CoactionMap& co_global,
                                    const LinearMap& incl, const LinearMap& proj);

}  // namespace halg
