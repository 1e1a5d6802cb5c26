#pragma once

#include "halg/linalg.hpp"
#include "halg/report.hpp"

namespace halg {

/// Structure-constant coalgebra: delta is dim^2 x dim (column j = image of
/// the j-th basis vector on row-major pair indices), epsilon is 1 x dim.
/// Validity is not enforced at construction; run check_coalgebra.
struct Coalgebra {
  VectorSpace space;
  LinearMap delta;
  LinearMap epsilon;

  std::size_t dim() const { return space.dim; }
  const FieldSpec& field() const { return space.field; }
};

/// Structure-constant algebra: mul is dim x dim^2, unit is dim x 1.
struct Algebra {
  VectorSpace space;
  LinearMap mul;
  LinearMap unit;

  std::size_t dim() const { return space.dim; }
  const FieldSpec& field() const { return space.field; }
};

void require_coalgebra_shapes(const Coalgebra& c);
void require_algebra_shapes(const Algebra& a);

CheckReport check_coalgebra(const Coalgebra& c);
CheckReport check_algebra(const Algebra& a);

/// Convolution algebra of C and the ground field: the dual algebra C*.
Algebra dual_algebra(const Coalgebra& c);
/// Dual coalgebra of a finite-dimensional algebra.
Coalgebra dual_coalgebra(const Algebra& a);
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);

/// Delta_D ∘ f = (f⊗f) ∘ Delta_C; with the counit flag also eps_D ∘ f = eps_C
/// (both together make f a coalgebra morphism).
CheckReport check_comultiplicative(const LinearMap& f, const Coalgebra& c,
                                   const Coalgebra& d, bool check_counit);

/// The one-dimensional coalgebra on the ground field.
Coalgebra ground_coalgebra(const FieldSpec& f);

std::vector<std::string> dual_labels(const VectorSpace& s);
std::vector<std::string> tensor_labels(const VectorSpace& a, const VectorSpace& b);

}  // namespace halg
