#pragma once

#include <optional>

#include "halg/coalgebra.hpp"

namespace halg {

/// Algebra and coalgebra on the same space; compatibility is checked, not
/// enforced at construction.
struct Bialgebra {
  Algebra alg;
  Coalgebra coalg;

  std::size_t dim() const { return alg.space.dim; }
  const FieldSpec& field() const { return alg.space.field; }
  const VectorSpace& space() const { return alg.space; }
  const LinearMap& mul() const { return alg.mul; }
  const LinearMap& unit() const { return alg.unit; }
  const LinearMap& delta() const { return coalg.delta; }
  const LinearMap& epsilon() const { return coalg.epsilon; }
};

struct HopfAlgebra {
  Bialgebra bialg;
  LinearMap antipode;

  std::size_t dim() const { return bialg.dim(); }
  const FieldSpec& field() const { return bialg.field(); }
  const VectorSpace& space() const { return bialg.space(); }
  const LinearMap& mul() const { return bialg.mul(); }
  const LinearMap& unit() const { return bialg.unit(); }
  const LinearMap& delta() const { return bialg.delta(); }
  const LinearMap& epsilon() const { return bialg.epsilon(); }
  const Coalgebra& coalgebra() const { return bialg.coalg; }
  const Algebra& algebra() const { return bialg.alg; }
  Vec one() const { return bialg.unit().col(0); }
  Vec counit_row() const { return bialg.epsilon().row(0); }
};

/// Algebra/coalgebra axioms plus the four bialgebra compatibilities.
CheckReport check_bialgebra(const Bialgebra& b);

/// Convolution product m_A ∘ (f⊗g) ∘ Delta_C of two maps C -> A.
LinearMap convolution(const LinearMap& f, const LinearMap& g, const Coalgebra& c,
                      const Algebra& a);

/// Solves the linear system making S a two-sided convolution inverse of the
/// identity. Returns the unique solution, or nullopt when none exists.
/// Throws NotABialgebra when the input fails check_bialgebra.
std::optional<HopfAlgebra> compute_antipode(const Bialgebra& b);

/// Defining convolution identities plus anti(co)multiplicativity, S(1)=1 and
/// counit preservation.
CheckReport check_antipode_properties(const HopfAlgebra& h);

/// Hopf structure on the dual space (finite dimension: H^0 = H*).
HopfAlgebra dual_hopf(const HopfAlgebra& h);

/// Whether the evaluation pairing H* x H -> k has full rank. Always true at
/// finite dimension; kept as an explicit rank check so constructions relying
/// on the separation hypothesis name it in their code path.
bool separates_points(const HopfAlgebra& h);

}  // namespace halg
