#include "halg/hopf.hpp"

#include "halg/axiom.hpp"

namespace halg {

CheckReport check_bialgebra(const Bialgebra& b) {
  require_algebra_shapes(b.alg);
  require_coalgebra_shapes(b.coalg);
  if (b.alg.space.dim != b.coalg.space.dim) {
    throw DimensionMismatch("algebra and coalgebra live on different spaces");
  }
  CheckReport rep;
  rep.merge("alg", check_algebra(b.alg));
  rep.merge("coalg", check_coalgebra(b.coalg));

  const std::size_t n = b.dim();
  const Vec one = b.unit().col(0);
  Axis ax{"a", n, &b.space()};
  Axis bx{"b", n, &b.space()};

  rep.add(check_identity(
      "delta-mult", {ax, bx}, [&](const std::vector<std::size_t>& i) {
        Tensor lhs(b.delta().apply(b.mul().col(i[0] * n + i[1])), {n, n});
        Tensor t = Tensor::outer(Tensor(b.delta().col(i[0]), {n, n}),
                                 Tensor(b.delta().col(i[1]), {n, n}));
        Tensor rhs = t.swap_adjacent(1)
                         .merged(0)
                         .apply(b.mul(), 0)
                         .merged(1)
                         .apply(b.mul(), 1);
        return std::make_pair(lhs, rhs);
      }));
  {
    Tensor lhs(b.delta().apply(one), {n, n});
    Tensor rhs = Tensor::outer(Tensor(one, {n}), Tensor(one, {n}));
    rep.add(check_identity("delta-unit", {},
                           [&](const std::vector<std::size_t>&) {
                             return std::make_pair(lhs, rhs);
                           }));
  }
  rep.add(check_identity(
      "epsilon-mult", {ax, bx}, [&](const std::vector<std::size_t>& i) {
        Tensor lhs(b.epsilon().apply(b.mul().col(i[0] * n + i[1])), {1});
        Tensor rhs(Vec{b.epsilon().at(0, i[0]) * b.epsilon().at(0, i[1])}, {1});
        return std::make_pair(lhs, rhs);
      }));
  {
    Tensor lhs(b.epsilon().apply(one), {1});
    Tensor rhs(Vec{Scalar::one(b.field())}, {1});
    rep.add(check_identity("epsilon-unit", {},
                           [&](const std::vector<std::size_t>&) {
                             return std::make_pair(lhs, rhs);
                           }));
  }
  return rep;
}

LinearMap convolution(const LinearMap& f, const LinearMap& g, const Coalgebra& c,
                      const Algebra& a) {
  if (f.cols() != c.dim() || g.cols() != c.dim() || f.rows() != a.dim() ||
      g.rows() != a.dim()) {
    throw DimensionMismatch("convolution: maps must go from C to A");
  }
  return compose(a.mul, compose(kron(f, g), c.delta));
}

std::optional<HopfAlgebra> compute_antipode(const Bialgebra& b) {
  if (!check_bialgebra(b).pass()) {
    throw NotABialgebra("antipode requested for a non-bialgebra");
  }
  const std::size_t n = b.dim();
  const FieldSpec f = b.field();
  // Unknowns S[r][a] at index r*n+a; equations S(h_1)h_2 = eps(h)1 = h_1 S(h_2)
  LinearMap sys(2 * n * n, n * n, f);
  Vec rhs = zeros(2 * n * n, f);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t bb = 0; bb < n; ++bb) {
        const Scalar& d = b.delta().at(a * n + bb, j);
        if (d.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t r = 0; r < n; ++r) {
            const Scalar& ml = b.mul().at(i, r * n + bb);
            if (!ml.is_zero()) {
              const std::size_t row = j * n + i;
              sys.set(row, r * n + a, sys.at(row, r * n + a) + d * ml);
            }
            const Scalar& mr = b.mul().at(i, a * n + r);
            if (!mr.is_zero()) {
              const std::size_t row = n * n + j * n + i;
              sys.set(row, r * n + bb, sys.at(row, r * n + bb) + d * mr);
            }
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      Scalar v = b.epsilon().at(0, j) * b.unit().at(i, 0);
      rhs[j * n + i] = v;
      rhs[n * n + j * n + i] = v;
    }
  }
  SolveResult sol = solve(sys, rhs);
  if (!sol.consistent) return std::nullopt;
  if (!sol.nullspace.empty()) {
    throw InternalInvariant("antipode system is consistent but not unique");
  }
  LinearMap s(n, n, f);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t a = 0; a < n; ++a) s.set(r, a, sol.particular[r * n + a]);
  }
  return HopfAlgebra{b, s};
}

CheckReport check_antipode_properties(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  if (h.antipode.rows() != n || h.antipode.cols() != n) {
    throw DimensionMismatch("antipode must be dim x dim");
  }
  CheckReport rep;
  const Vec one = h.one();
  const LinearMap& s = h.antipode;
  Axis hx{"h", n, &h.space()};
  Axis gx{"g", n, &h.space()};

  rep.add(check_identity("S-conv-left", {hx}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs = Tensor(h.delta().col(i[0]), {n, n}).apply(s, 0).merged(0).apply(h.mul(), 0);
    Tensor rhs = Tensor(one, {n}).scaled(h.epsilon().at(0, i[0]));
    return std::make_pair(lhs, rhs);
  }));
  rep.add(check_identity("S-conv-right", {hx}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs = Tensor(h.delta().col(i[0]), {n, n}).apply(s, 1).merged(0).apply(h.mul(), 0);
    Tensor rhs = Tensor(one, {n}).scaled(h.epsilon().at(0, i[0]));
    return std::make_pair(lhs, rhs);
  }));
  rep.add(check_identity(
      "S-antimult", {hx, gx}, [&](const std::vector<std::size_t>& i) {
        Tensor lhs(s.apply(h.mul().col(i[0] * n + i[1])), {n});
        Tensor t = Tensor::outer(Tensor(s.col(i[1]), {n}), Tensor(s.col(i[0]), {n}));
        Tensor rhs = t.merged(0).apply(h.mul(), 0);
        return std::make_pair(lhs, rhs);
      }));
  {
    Tensor lhs(s.apply(one), {n});
    Tensor rhs(one, {n});
    rep.add(check_identity("S-unit", {}, [&](const std::vector<std::size_t>&) {
      return std::make_pair(lhs, rhs);
    }));
  }
  rep.add(check_identity("S-anticomult", {hx}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs(h.delta().apply(s.col(i[0])), {n, n});
    Tensor rhs =
        Tensor(h.delta().col(i[0]), {n, n}).apply(s, 0).apply(s, 1).swap_adjacent(0);
    return std::make_pair(lhs, rhs);
  }));
  rep.add(check_identity("S-counit", {hx}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs(h.epsilon().apply(s.col(i[0])), {1});
    Tensor rhs(Vec{h.epsilon().at(0, i[0])}, {1});
    return std::make_pair(lhs, rhs);
  }));
  return rep;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  HopfAlgebra out;
  VectorSpace space{h.dim(), h.field(), dual_labels(h.space())};
  out.bialg.alg = Algebra{space, h.delta().transpose(), h.epsilon().transpose()};
  out.bialg.coalg = Coalgebra{space, h.mul().transpose(), h.unit().transpose()};
  out.antipode = h.antipode.transpose();
  return out;
}

bool separates_points(const HopfAlgebra& h) {
  // Dual-basis evaluation pairing; the identity matrix in coordinates.
  const std::size_t n = h.dim();
  LinearMap pairing = LinearMap::identity(n, h.field());
  return rank(pairing) == n;
}

}  // namespace halg
