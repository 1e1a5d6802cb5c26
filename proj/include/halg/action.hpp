#pragma once

#include "halg/hopf.hpp"

namespace halg {

/// Linear map C⊗H -> C with row-major pair index (c,h). Axioms are checked,
/// never enforced, so deliberately broken instances can serve as negative
/// tests.
struct ActionMap {
  std::size_t c_dim = 0, h_dim = 0;
  LinearMap map;  // c_dim x (c_dim*h_dim)

  Vec pair_col(std::size_t c, std::size_t h) const { return map.col(c * h_dim + h); }
  /// Action by a fixed basis element of H, as an operator on C.
  LinearMap fixed_h(std::size_t h) const;
  /// Action evaluated on arbitrary vectors.
  Vec apply(const Vec& c, const Vec& h) const;
};

/// Linear map H⊗A -> A with row-major pair index (h,a); houses actions on
/// dual spaces.
struct DualActionMap {
  std::size_t h_dim = 0, a_dim = 0;
  LinearMap map;  // a_dim x (h_dim*a_dim)

  Vec pair_col(std::size_t h, std::size_t a) const { return map.col(h * a_dim + a); }
  LinearMap fixed_h(std::size_t h) const;
  Vec apply(const Vec& h, const Vec& a) const;
};

void require_action_shapes(const Coalgebra& c, const HopfAlgebra& h,
                           const ActionMap& act);

/// Right multiplication by the g-th basis element, as an operator on H.
LinearMap right_mult_by_basis(const HopfAlgebra& h, std::size_t g);
/// Left multiplication by an arbitrary element.
LinearMap left_mult_by(const Algebra& a, const Vec& x);

CheckReport check_module_coalgebra(const Coalgebra& d, const HopfAlgebra& h,
                                   const ActionMap& act);
CheckReport check_counit_compat(const Coalgebra& d, const HopfAlgebra& h,
                                const ActionMap& act);
CheckReport check_partial_module_coalgebra(const Coalgebra& c, const HopfAlgebra& h,
                                           const ActionMap& act, bool symmetric);
/// Variant for non-counital comultiplications (coassociativity is still
/// required and re-checked).
CheckReport check_pmc_noncounital(std::size_t dim, const LinearMap& delta,
                                  const HopfAlgebra& h, const ActionMap& act,
                                  bool symmetric);

struct GlobalityResult {
  bool global = false;
  std::optional<Witness> witness;  // first basis pair violating the criterion
};

/// Counit criterion for globality of a partial action; also verifies the
/// criterion agrees with the direct module-coalgebra check.
/// Throws NotPartialAction when the input is not a partial action.
GlobalityResult is_global_action(const Coalgebra& c, const HopfAlgebra& h,
                                 const ActionMap& act);

/// Partial action c ⇀ h = proj(incl(c) ⇀ h) induced by a comultiplicative
/// projection satisfying the projection compatibility condition
/// proj(incl(proj(d)) ⇀ h) = eps(proj(d_1)) proj(d_2 ⇀ h); all hypotheses are
/// verified, the condition failure carries a witness.
ActionMap induce_partial_action(const Coalgebra& c, const Coalgebra& d,
                                const HopfAlgebra& h, const ActionMap& act_global,
                                const LinearMap& incl, const LinearMap& proj);

/// Transpose transfer (h ⇁ α)(c) = α(c ⇀ h) onto the dual space.
DualActionMap dual_action_on_dual(const Coalgebra& c, const HopfAlgebra& h,
                                  const ActionMap& act);

CheckReport check_module_algebra(const Algebra& a, const HopfAlgebra& h,
                                 const DualActionMap& act);
CheckReport check_partial_module_algebra(const Algebra& a, const HopfAlgebra& h,
                                         const DualActionMap& act, bool symmetric);

/// Pairing identity (h ⇁ α)(c) = α(c ⇀ h) on all basis triples.
CheckReport check_compatibility_pairing(const Coalgebra& c, const HopfAlgebra& h,
                                        const ActionMap& act,
                                        const DualActionMap& dact);

}  // namespace halg
