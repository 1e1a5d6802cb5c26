#pragma once

#include "halg/coaction.hpp"

namespace halg {

/// Finite group by Cayley table; associativity, identity and inverses are
/// verified at construction.
struct GroupTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = i*j
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::string> labels;

  static GroupTable cyclic(std::size_t n);
  static GroupTable klein();
  static GroupTable symmetric3();
  /// "Z2".."Z12", "Klein", "S3" (case-insensitive).
  static GroupTable by_name(const std::string& name);
  static GroupTable from_table(std::vector<std::vector<std::size_t>> table,
                               std::vector<std::string> labels);

  std::size_t element_by_label(const std::string& label) const;
};

/// Group algebra kG with group-like coproduct; the antipode is solved for,
/// never assumed.
HopfAlgebra group_algebra(const GroupTable& g, const FieldSpec& f);

/// x ⇀ g = x on the subset N, 0 elsewhere; a partial action of kG on the
/// ground field exactly when N is a subgroup. No axiom is enforced here so
/// the constructor doubles as a negative-test generator.
ActionMap subgroup_partial_action_on_k(const GroupTable& g,
                                       const std::vector<std::size_t>& n,
                                       const FieldSpec& f);

/// Coaction 1 -> ((1/|N|) Σ_{g∈N} g) ⊗ 1 of kG on the ground field; requires
/// the characteristic not to divide |N| (throws CharacteristicDividesOrder).
CoactionMap subgroup_partial_coaction_on_k(const GroupTable& g,
                                           const std::vector<std::size_t>& n,
                                           const FieldSpec& f);

/// H acting on itself by right multiplication.
ActionMap regular_module_coalgebra(const HopfAlgebra& h);

/// (c ⊗ d) ⇀ h = c ⊗ (d ⇀ h) on tensor_coalgebra(C, D).
ActionMap tensor_module_coalgebra(const Coalgebra& c, const Coalgebra& d,
                                  const ActionMap& act_d);

/// Adjoint coaction h -> h_1 S(h_3) ⊗ h_2 of H on itself.
CoactionMap adjoint_coaction(const HopfAlgebra& h);

/// d -> 1_H ⊗ d.
CoactionMap trivial_coaction(const Coalgebra& d, const HopfAlgebra& h);

/// The coalgebra H* underlying the dual-basis comodule.
Coalgebra dual_coalgebra_of(const HopfAlgebra& h);
/// f -> Σ_i h_i ⊗ f∗h_i* on H* (finite dimension).
CoactionMap dual_basis_comodule(const HopfAlgebra& h);

/// (λ ⊗ I_D) on tensor_coalgebra(C, D).
CoactionMap tensor_comodule_coalgebra(const Coalgebra& c, const CoactionMap& co_c,
                                      const Coalgebra& d);

}  // namespace halg
