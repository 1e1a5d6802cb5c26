#include "halg/coalgebra.hpp"

#include "halg/axiom.hpp"

namespace halg {

void require_coalgebra_shapes(const Coalgebra& c) {
  const std::size_t n = c.space.dim;
  if (n == 0) throw DimensionMismatch("coalgebra of dimension 0");
  if (c.delta.rows() != n * n || c.delta.cols() != n) {
    throw DimensionMismatch("delta must be dim^2 x dim");
  }
  if (c.epsilon.rows() != 1 || c.epsilon.cols() != n) {
    throw DimensionMismatch("epsilon must be 1 x dim");
  }
  if (!(c.delta.field() == c.space.field) || !(c.epsilon.field() == c.space.field)) {
    throw FieldMismatch("coalgebra structure maps over a different field");
  }
}

void require_algebra_shapes(const Algebra& a) {
  const std::size_t n = a.space.dim;
  if (n == 0) throw DimensionMismatch("algebra of dimension 0");
  if (a.mul.rows() != n || a.mul.cols() != n * n) {
    throw DimensionMismatch("mul must be dim x dim^2");
  }
  if (a.unit.rows() != n || a.unit.cols() != 1) {
    throw DimensionMismatch("unit must be dim x 1");
  }
  if (!(a.mul.field() == a.space.field) || !(a.unit.field() == a.space.field)) {
    throw FieldMismatch("algebra structure maps over a different field");
  }
}

CheckReport check_coalgebra(const Coalgebra& c) {
  require_coalgebra_shapes(c);
  CheckReport rep;
  const std::size_t n = c.dim();
  const Vec eps = c.epsilon.row(0);
  Axis ax{"c", n, &c.space};

  rep.add(check_identity("coassoc", {ax}, [&](const std::vector<std::size_t>& i) {
    Tensor d(c.delta.col(i[0]), {n, n});
    Tensor lhs = d.apply(c.delta, 0).split(0, n, n);   // (Δ⊗I)Δ
    Tensor rhs = d.apply(c.delta, 1).split(1, n, n);   // (I⊗Δ)Δ
    return std::make_pair(lhs, rhs);
  }));
  rep.add(check_identity("counit-left", {ax}, [&](const std::vector<std::size_t>& i) {
    Tensor d(c.delta.col(i[0]), {n, n});
    Tensor lhs = d.contract(eps, 0);                   // (ε⊗I)Δ
    Tensor rhs(basis_vec(n, i[0], c.field()), {n});
    return std::make_pair(lhs, rhs);
  }));
  rep.add(check_identity("counit-right", {ax}, [&](const std::vector<std::size_t>& i) {
    Tensor d(c.delta.col(i[0]), {n, n});
    Tensor lhs = d.contract(eps, 1);                   // (I⊗ε)Δ
    Tensor rhs(basis_vec(n, i[0], c.field()), {n});
    return std::make_pair(lhs, rhs);
  }));
  return rep;
}

CheckReport check_algebra(const Algebra& a) {
  require_algebra_shapes(a);
  CheckReport rep;
  const std::size_t n = a.dim();
  const Vec one = a.unit.col(0);
  Axis ax{"a", n, &a.space};
  Axis bx{"b", n, &a.space};
  Axis cx{"c", n, &a.space};

  rep.add(check_identity(
      "assoc", {ax, bx, cx}, [&](const std::vector<std::size_t>& i) {
        Vec ab = a.mul.col(i[0] * n + i[1]);
        Tensor l = Tensor::outer(Tensor(ab, {n}),
                                 Tensor(basis_vec(n, i[2], a.field()), {n}));
        Tensor lhs = l.merged(0).apply(a.mul, 0);
        Vec bc = a.mul.col(i[1] * n + i[2]);
        Tensor r = Tensor::outer(Tensor(basis_vec(n, i[0], a.field()), {n}),
                                 Tensor(bc, {n}));
        Tensor rhs = r.merged(0).apply(a.mul, 0);
        return std::make_pair(lhs, rhs);
      }));
  rep.add(check_identity("unit-left", {ax}, [&](const std::vector<std::size_t>& i) {
    Tensor t = Tensor::outer(Tensor(one, {n}),
                             Tensor(basis_vec(n, i[0], a.field()), {n}));
    Tensor lhs = t.merged(0).apply(a.mul, 0);
    Tensor rhs(basis_vec(n, i[0], a.field()), {n});
    return std::make_pair(lhs, rhs);
  }));
  rep.add(check_identity("unit-right", {ax}, [&](const std::vector<std::size_t>& i) {
    Tensor t = Tensor::outer(Tensor(basis_vec(n, i[0], a.field()), {n}),
                             Tensor(one, {n}));
    Tensor lhs = t.merged(0).apply(a.mul, 0);
    Tensor rhs(basis_vec(n, i[0], a.field()), {n});
    return std::make_pair(lhs, rhs);
  }));
  return rep;
}

std::vector<std::string> dual_labels(const VectorSpace& s) {
  std::vector<std::string> out;
  out.reserve(s.dim);
  for (std::size_t i = 0; i < s.dim; ++i) out.push_back(s.label(i) + "^");
  return out;
}

std::vector<std::string> tensor_labels(const VectorSpace& a, const VectorSpace& b) {
  std::vector<std::string> out;
  out.reserve(a.dim * b.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < b.dim; ++j) {
      out.push_back("(" + a.label(i) + "|" + b.label(j) + ")");
    }
  }
  return out;
}

Algebra dual_algebra(const Coalgebra& c) {
  require_coalgebra_shapes(c);
  Algebra a;
  a.space = VectorSpace{c.dim(), c.field(), dual_labels(c.space)};
  a.mul = c.delta.transpose();
  a.unit = c.epsilon.transpose();
  return a;
}

Coalgebra dual_coalgebra(const Algebra& a) {
  require_algebra_shapes(a);
  Coalgebra c;
  c.space = VectorSpace{a.dim(), a.field(), dual_labels(a.space)};
  c.delta = a.mul.transpose();
  c.epsilon = a.unit.transpose();
  return c;
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  require_coalgebra_shapes(c);
  require_coalgebra_shapes(d);
  if (!(c.field() == d.field())) throw FieldMismatch("tensor_coalgebra");
  const std::size_t nc = c.dim(), nd = d.dim(), n = nc * nd;
  Coalgebra out;
  out.space = VectorSpace{n, c.field(), tensor_labels(c.space, d.space)};
  // Delta on (a|b): (I⊗τ⊗I)(Δ_C⊗Δ_D), written entrywise to avoid the
  // quadratic-size permutation matrix
  out.delta = LinearMap(n * n, n, c.field());
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nd; ++b) {
      const std::size_t src = a * nd + b;
      for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t k = 0; k < nc; ++k) {
          const Scalar& dc = c.delta.at(i * nc + k, a);
          if (dc.is_zero()) continue;
          for (std::size_t j = 0; j < nd; ++j) {
            for (std::size_t l = 0; l < nd; ++l) {
              const Scalar& dd = d.delta.at(j * nd + l, b);
              if (dd.is_zero()) continue;
              const std::size_t row = (i * nd + j) * n + (k * nd + l);
              out.delta.set(row, src, out.delta.at(row, src) + dc * dd);
            }
          }
        }
      }
    }
  }
  out.epsilon = LinearMap(1, n, c.field());
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nd; ++b) {
      out.epsilon.set(0, a * nd + b, c.epsilon.at(0, a) * d.epsilon.at(0, b));
    }
  }
  return out;
}

CheckReport check_comultiplicative(const LinearMap& f, const Coalgebra& c,
                                   const Coalgebra& d, bool check_counit) {
  require_coalgebra_shapes(c);
  require_coalgebra_shapes(d);
  if (f.cols() != c.dim() || f.rows() != d.dim()) {
    throw DimensionMismatch("map shape does not match the two coalgebras");
  }
  CheckReport rep;
  const std::size_t nc = c.dim(), nd = d.dim();
  Axis ax{"c", nc, &c.space};
  rep.add(check_identity("comult", {ax}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs(d.delta.apply(f.col(i[0])), {nd, nd});
    Tensor rhs = Tensor(c.delta.col(i[0]), {nc, nc}).apply(f, 0).apply(f, 1);
    return std::make_pair(lhs, rhs);
  }));
  if (check_counit) {
    rep.add(check_identity("counit", {ax}, [&](const std::vector<std::size_t>& i) {
      Tensor lhs(d.epsilon.apply(f.col(i[0])), {1});
      Tensor rhs(c.epsilon.col(i[0]), {1});
      return std::make_pair(lhs, rhs);
    }));
  }
  return rep;
}

Coalgebra ground_coalgebra(const FieldSpec& f) {
  Coalgebra c;
  c.space = VectorSpace{1, f, {"1"}};
  c.delta = LinearMap(1, 1, f);
  c.delta.set(0, 0, Scalar::one(f));
  c.epsilon = LinearMap(1, 1, f);
  c.epsilon.set(0, 0, Scalar::one(f));
  return c;
}

}  // namespace halg
