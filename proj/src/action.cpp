#include "halg/action.hpp"

#include "halg/axiom.hpp"

namespace halg {

LinearMap ActionMap::fixed_h(std::size_t h) const {
  LinearMap out(c_dim, c_dim, map.field());
  for (std::size_t x = 0; x < c_dim; ++x) {
    for (std::size_t c = 0; c < c_dim; ++c) out.set(x, c, map.at(x, c * h_dim + h));
  }
  return out;
}

Vec ActionMap::apply(const Vec& c, const Vec& h) const {
  Tensor t = Tensor::outer(Tensor(c, {c_dim}), Tensor(h, {h_dim}));
  return t.merged(0).apply(map, 0).data();
}

LinearMap DualActionMap::fixed_h(std::size_t h) const {
  LinearMap out(a_dim, a_dim, map.field());
  for (std::size_t x = 0; x < a_dim; ++x) {
    for (std::size_t a = 0; a < a_dim; ++a) out.set(x, a, map.at(x, h * a_dim + a));
  }
  return out;
}

Vec DualActionMap::apply(const Vec& h, const Vec& a) const {
  Tensor t = Tensor::outer(Tensor(h, {h_dim}), Tensor(a, {a_dim}));
  return t.merged(0).apply(map, 0).data();
}

void require_action_shapes(const Coalgebra& c, const HopfAlgebra& h,
                           const ActionMap& act) {
  require_coalgebra_shapes(c);
  if (act.c_dim != c.dim() || act.h_dim != h.dim()) {
    throw DimensionMismatch("action dims do not match coalgebra/Hopf algebra");
  }
  if (act.map.rows() != act.c_dim || act.map.cols() != act.c_dim * act.h_dim) {
    throw DimensionMismatch("action matrix must be c_dim x (c_dim*h_dim)");
  }
  if (!(act.map.field() == c.field()) || !(h.field() == c.field())) {
    throw FieldMismatch("action over a different field");
  }
}

LinearMap right_mult_by_basis(const HopfAlgebra& h, std::size_t g) {
  const std::size_t n = h.dim();
  LinearMap out(n, n, h.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) out.set(r, j, h.mul().at(r, j * n + g));
  }
  return out;
}

LinearMap left_mult_by(const Algebra& a, const Vec& x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw DimensionMismatch("left_mult_by: bad element");
  LinearMap out(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(a.field());
      for (std::size_t k = 0; k < n; ++k) {
        if (x[k].is_zero()) continue;
        const Scalar& m = a.mul.at(i, k * n + j);
        if (m.is_zero()) continue;
        acc += x[k] * m;
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

namespace {

// Shared implementations of the unit and comultiplicativity axioms; the
// global and partial definitions agree on these two.
CheckEntry axiom_act_unit(const std::string& name, const Coalgebra& c,
                          const HopfAlgebra& h, const ActionMap& act) {
  const Vec one = h.one();
  Axis cx{"c", c.dim(), &c.space};
  return check_identity(name, {cx}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs(act.apply(basis_vec(c.dim(), i[0], c.field()), one), {c.dim()});
    Tensor rhs(basis_vec(c.dim(), i[0], c.field()), {c.dim()});
    return std::make_pair(lhs, rhs);
  });
}

CheckEntry axiom_act_comult(const std::string& name, const Coalgebra& c,
                            const HopfAlgebra& h, const ActionMap& act) {
  const std::size_t n = c.dim(), m = h.dim();
  Axis cx{"c", n, &c.space};
  Axis hx{"h", m, &h.space()};
  return check_identity(name, {cx, hx}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs(c.delta.apply(act.pair_col(i[0], i[1])), {n, n});
    Tensor t = Tensor::outer(Tensor(c.delta.col(i[0]), {n, n}),
                             Tensor(h.delta().col(i[1]), {m, m}));
    Tensor rhs = t.swap_adjacent(1)
                     .merged(0)
                     .apply(act.map, 0)
                     .merged(1)
                     .apply(act.map, 1);
    return std::make_pair(lhs, rhs);
  });
}

}  // namespace

CheckReport check_module_coalgebra(const Coalgebra& d, const HopfAlgebra& h,
                                   const ActionMap& act) {
  require_action_shapes(d, h, act);
  CheckReport rep;
  const std::size_t n = d.dim(), m = h.dim();
  rep.add(axiom_act_unit("MC-1", d, h, act));
  rep.add(axiom_act_comult("MC-2", d, h, act));
  Axis dx{"d", n, &d.space};
  Axis hx{"h", m, &h.space()};
  Axis gx{"g", m, &h.space()};
  rep.add(check_identity(
      "MC-3", {dx, hx, gx}, [&](const std::vector<std::size_t>& i) {
        Vec dh = act.pair_col(i[0], i[1]);
        Tensor lhs(act.apply(dh, basis_vec(m, i[2], h.field())), {n});
        Vec hg = h.mul().col(i[1] * m + i[2]);
        Tensor rhs(act.apply(basis_vec(n, i[0], d.field()), hg), {n});
        return std::make_pair(lhs, rhs);
      }));
  return rep;
}

CheckReport check_counit_compat(const Coalgebra& d, const HopfAlgebra& h,
                                const ActionMap& act) {
  require_action_shapes(d, h, act);
  CheckReport rep;
  Axis dx{"d", d.dim(), &d.space};
  Axis hx{"h", h.dim(), &h.space()};
  rep.add(check_identity(
      "counit-compat", {dx, hx}, [&](const std::vector<std::size_t>& i) {
        Tensor lhs(d.epsilon.apply(act.pair_col(i[0], i[1])), {1});
        Tensor rhs(Vec{d.epsilon.at(0, i[0]) * h.epsilon().at(0, i[1])}, {1});
        return std::make_pair(lhs, rhs);
      }));
  return rep;
}

CheckReport check_partial_module_coalgebra(const Coalgebra& c, const HopfAlgebra& h,
                                           const ActionMap& act, bool symmetric) {
  require_action_shapes(c, h, act);
  CheckReport rep;
  const std::size_t n = c.dim(), m = h.dim();
  const Vec eps = c.epsilon.row(0);
  rep.add(axiom_act_unit("PMC-1", c, h, act));
  rep.add(axiom_act_comult("PMC-2", c, h, act));
  Axis cx{"c", n, &c.space};
  Axis hx{"h", m, &h.space()};
  Axis gx{"g", m, &h.space()};
  rep.add(check_identity(
      "PMC-3", {cx, hx, gx}, [&](const std::vector<std::size_t>& i) {
        Vec ch = act.pair_col(i[0], i[1]);
        Tensor lhs(act.apply(ch, basis_vec(m, i[2], h.field())), {n});
        LinearMap rg = right_mult_by_basis(h, i[2]);
        Tensor t = Tensor::outer(Tensor(c.delta.col(i[0]), {n, n}),
                                 Tensor(h.delta().col(i[1]), {m, m}));
        Tensor rhs = t.swap_adjacent(1)        // (c1,h1,c2,h2)
                         .apply(rg, 3)         // (c1,h1,c2,h2g)
                         .merged(2)
                         .apply(act.map, 2)    // (c1,h1,y)
                         .merged(0)
                         .apply(act.map, 0)    // (x,y)
                         .contract(eps, 0);    // eps(x)·y
        return std::make_pair(lhs, rhs);
      }));
  if (symmetric) {
    rep.add(check_identity(
        "PMC-4", {cx, hx, gx}, [&](const std::vector<std::size_t>& i) {
          Vec ch = act.pair_col(i[0], i[1]);
          Tensor lhs(act.apply(ch, basis_vec(m, i[2], h.field())), {n});
          LinearMap rg = right_mult_by_basis(h, i[2]);
          Tensor t = Tensor::outer(Tensor(c.delta.col(i[0]), {n, n}),
                                   Tensor(h.delta().col(i[1]), {m, m}));
          Tensor rhs = t.swap_adjacent(1)      // (c1,h1,c2,h2)
                           .apply(rg, 1)        // (c1,h1g,c2,h2)
                           .merged(0)
                           .apply(act.map, 0)   // (x,c2,h2)
                           .merged(1)
                           .apply(act.map, 1)   // (x,y)
                           .contract(eps, 1);   // x·eps(y)
          return std::make_pair(lhs, rhs);
        }));
  }
  return rep;
}

CheckReport check_pmc_noncounital(std::size_t dim, const LinearMap& delta,
                                  const HopfAlgebra& h, const ActionMap& act,
                                  bool symmetric) {
  if (delta.rows() != dim * dim || delta.cols() != dim) {
    throw DimensionMismatch("delta must be dim^2 x dim");
  }
  if (act.c_dim != dim || act.h_dim != h.dim()) {
    throw DimensionMismatch("action dims do not match");
  }
  CheckReport rep;
  const std::size_t n = dim, m = h.dim();
  const FieldSpec f = delta.field();
  Axis cx{"c", n, nullptr};
  Axis hx{"h", m, &h.space()};
  Axis kx{"k", m, &h.space()};

  rep.add(check_identity("coassoc", {cx}, [&](const std::vector<std::size_t>& i) {
    Tensor d(delta.col(i[0]), {n, n});
    return std::make_pair(d.apply(delta, 0).split(0, n, n),
                          d.apply(delta, 1).split(1, n, n));
  }));
  {
    const Vec one = h.one();
    rep.add(check_identity("PMC'-1", {cx}, [&](const std::vector<std::size_t>& i) {
      Tensor lhs(act.apply(basis_vec(n, i[0], f), one), {n});
      Tensor rhs(basis_vec(n, i[0], f), {n});
      return std::make_pair(lhs, rhs);
    }));
  }
  rep.add(check_identity(
      "PMC'-2", {cx, hx, kx}, [&](const std::vector<std::size_t>& i) {
        LinearMap ak = act.fixed_h(i[2]);
        Vec ch = act.pair_col(i[0], i[1]);
        Tensor lhs = Tensor(delta.apply(ch), {n, n}).apply(ak, 1);
        LinearMap rk = right_mult_by_basis(h, i[2]);
        Tensor t = Tensor::outer(Tensor(delta.col(i[0]), {n, n}),
                                 Tensor(h.delta().col(i[1]), {m, m}));
        Tensor rhs = t.apply(rk, 3)            // (c1,c2,h1,h2k)
                         .swap_adjacent(1)     // (c1,h1,c2,h2k)
                         .merged(2)
                         .apply(act.map, 2)    // (c1,h1,y)
                         .merged(0)
                         .apply(act.map, 0);   // (x,y)
        return std::make_pair(lhs, rhs);
      }));
  if (symmetric) {
    rep.add(check_identity(
        "PMC'-3", {cx, hx, kx}, [&](const std::vector<std::size_t>& i) {
          LinearMap ak = act.fixed_h(i[2]);
          Vec ch = act.pair_col(i[0], i[1]);
          Tensor lhs = Tensor(delta.apply(ch), {n, n}).apply(ak, 0);
          LinearMap rk = right_mult_by_basis(h, i[2]);
          Tensor t = Tensor::outer(Tensor(delta.col(i[0]), {n, n}),
                                   Tensor(h.delta().col(i[1]), {m, m}));
          Tensor rhs = t.apply(rk, 2)          // (c1,c2,h1k,h2)
                           .swap_adjacent(1)   // (c1,h1k,c2,h2)
                           .merged(2)
                           .apply(act.map, 2)  // (c1,h1k,y)
                           .merged(0)
                           .apply(act.map, 0); // (x,y)
          return std::make_pair(lhs, rhs);
        }));
  }
  return rep;
}

GlobalityResult is_global_action(const Coalgebra& c, const HopfAlgebra& h,
                                 const ActionMap& act) {
  CheckReport pmc = check_partial_module_coalgebra(c, h, act, false);
  if (!pmc.pass()) {
    throw NotPartialAction("globality asked for a non-partial action:\n" +
                           pmc.summary());
  }
  GlobalityResult out;
  CheckReport crit = check_counit_compat(c, h, act);
  out.global = crit.pass();
  if (!out.global) out.witness = crit.entries().front().witness;
  // the counit criterion must match the direct module-coalgebra verdict
  bool direct = check_module_coalgebra(c, h, act).pass();
  if (direct != out.global) {
    throw InternalInvariant("globality criterion disagrees with direct check");
  }
  return out;
}

ActionMap induce_partial_action(const Coalgebra& c, const Coalgebra& d,
                                const HopfAlgebra& h, const ActionMap& act_global,
                                const LinearMap& incl, const LinearMap& proj) {
  require_action_shapes(d, h, act_global);
  require_coalgebra_shapes(c);
  if (incl.rows() != d.dim() || incl.cols() != c.dim() ||
      proj.rows() != c.dim() || proj.cols() != d.dim()) {
    throw DimensionMismatch("incl must be D x C and proj C x D");
  }
  if (!check_module_coalgebra(d, h, act_global).pass()) {
    throw NotModuleCoalgebra("induced action requires a global module coalgebra");
  }
  if (rank(incl) != c.dim()) {
    throw NotInjective("inclusion of C into D is not injective");
  }
  if (compose(proj, incl) != LinearMap::identity(c.dim(), c.field())) {
    throw NotAProjection("proj ∘ incl is not the identity of C");
  }
  if (!check_comultiplicative(incl, c, d, true).pass()) {
    throw NotComultiplicative("inclusion is not a coalgebra morphism");
  }
  if (!check_comultiplicative(proj, d, c, false).pass()) {
    throw NotComultiplicative("projection is not comultiplicative");
  }
  const std::size_t nd = d.dim(), m = h.dim();
  const Vec eps_proj = compose(c.epsilon, proj).row(0);
  Axis dx{"d", nd, &d.space};
  Axis hx{"h", m, &h.space()};
  CheckEntry cond = check_identity(
      "projection-condition", {dx, hx}, [&](const std::vector<std::size_t>& i) {
        Vec w = incl.apply(proj.col(i[0]));
        Vec lhs = proj.apply(act_global.apply(w, basis_vec(m, i[1], h.field())));
        Tensor t(d.delta.col(i[0]), {nd, nd});
        Vec v = t.contract(eps_proj, 0).data();
        Vec rhs = proj.apply(act_global.apply(v, basis_vec(m, i[1], h.field())));
        return std::make_pair(Tensor(lhs, {c.dim()}), Tensor(rhs, {c.dim()}));
      });
  if (!cond.pass) {
    throw ProjectionConditionFailed(
        "projection compatibility fails at " + cond.witness->index + ": lhs=" +
        cond.witness->lhs + " rhs=" + cond.witness->rhs);
  }
  ActionMap out;
  out.c_dim = c.dim();
  out.h_dim = m;
  out.map = LinearMap(c.dim(), c.dim() * m, c.field());
  for (std::size_t cc = 0; cc < c.dim(); ++cc) {
    Vec img = incl.col(cc);
    for (std::size_t hh = 0; hh < m; ++hh) {
      Vec v = proj.apply(act_global.apply(img, basis_vec(m, hh, h.field())));
      for (std::size_t x = 0; x < c.dim(); ++x) out.map.set(x, cc * m + hh, v[x]);
    }
  }
  if (!check_partial_module_coalgebra(c, h, out, false).pass()) {
    throw InternalInvariant("induced action failed the partial axioms");
  }
  return out;
}

DualActionMap dual_action_on_dual(const Coalgebra& c, const HopfAlgebra& h,
                                  const ActionMap& act) {
  require_action_shapes(c, h, act);
  DualActionMap out;
  out.h_dim = h.dim();
  out.a_dim = c.dim();
  out.map = LinearMap(c.dim(), h.dim() * c.dim(), c.field());
  for (std::size_t cc = 0; cc < c.dim(); ++cc) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      for (std::size_t a = 0; a < c.dim(); ++a) {
        out.map.set(cc, j * c.dim() + a, act.map.at(a, cc * h.dim() + j));
      }
    }
  }
  return out;
}

namespace {

void require_dual_action_shapes(const Algebra& a, const HopfAlgebra& h,
                                const DualActionMap& act) {
  require_algebra_shapes(a);
  if (act.a_dim != a.dim() || act.h_dim != h.dim()) {
    throw DimensionMismatch("dual action dims do not match");
  }
  if (act.map.rows() != act.a_dim || act.map.cols() != act.h_dim * act.a_dim) {
    throw DimensionMismatch("dual action matrix must be a_dim x (h_dim*a_dim)");
  }
}

CheckEntry axiom_dual_unit(const std::string& name, const Algebra& a,
                           const HopfAlgebra& h, const DualActionMap& act) {
  const Vec one_h = h.one();
  Axis ax{"a", a.dim(), &a.space};
  return check_identity(name, {ax}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs(act.apply(one_h, basis_vec(a.dim(), i[0], a.field())), {a.dim()});
    Tensor rhs(basis_vec(a.dim(), i[0], a.field()), {a.dim()});
    return std::make_pair(lhs, rhs);
  });
}

CheckEntry axiom_dual_mult(const std::string& name, const Algebra& a,
                           const HopfAlgebra& h, const DualActionMap& act) {
  const std::size_t n = a.dim(), m = h.dim();
  Axis hx{"h", m, &h.space()};
  Axis ax{"a", n, &a.space};
  Axis bx{"b", n, &a.space};
  return check_identity(name, {hx, ax, bx}, [&](const std::vector<std::size_t>& i) {
    Vec ab = a.mul.col(i[1] * n + i[2]);
    Tensor lhs(act.apply(basis_vec(m, i[0], h.field()), ab), {n});
    Tensor t = Tensor::outer(
        Tensor(h.delta().col(i[0]), {m, m}),
        Tensor::outer(Tensor(basis_vec(n, i[1], a.field()), {n}),
                      Tensor(basis_vec(n, i[2], a.field()), {n})));
    Tensor rhs = t.swap_adjacent(1)       // (h1,a,h2,b)
                     .merged(0)
                     .apply(act.map, 0)   // (x,h2,b)
                     .merged(1)
                     .apply(act.map, 1)   // (x,y)
                     .merged(0)
                     .apply(a.mul, 0);
    return std::make_pair(lhs, rhs);
  });
}

}  // namespace

CheckReport check_module_algebra(const Algebra& a, const HopfAlgebra& h,
                                 const DualActionMap& act) {
  require_dual_action_shapes(a, h, act);
  CheckReport rep;
  const std::size_t n = a.dim(), m = h.dim();
  rep.add(axiom_dual_unit("MA-1", a, h, act));
  rep.add(axiom_dual_mult("MA-2", a, h, act));
  Axis hx{"h", m, &h.space()};
  Axis kx{"k", m, &h.space()};
  Axis ax{"a", n, &a.space};
  rep.add(check_identity(
      "MA-3", {hx, kx, ax}, [&](const std::vector<std::size_t>& i) {
        Vec ka = act.pair_col(i[1], i[2]);
        Tensor lhs(act.apply(basis_vec(m, i[0], h.field()), ka), {n});
        Vec hk = h.mul().col(i[0] * m + i[1]);
        Tensor rhs(act.apply(hk, basis_vec(n, i[2], a.field())), {n});
        return std::make_pair(lhs, rhs);
      }));
  {
    const Vec one_a = a.unit.col(0);
    rep.add(check_identity("MA-4", {hx}, [&](const std::vector<std::size_t>& i) {
      Tensor lhs(act.apply(basis_vec(m, i[0], h.field()), one_a), {n});
      Tensor rhs = Tensor(one_a, {n}).scaled(h.epsilon().at(0, i[0]));
      return std::make_pair(lhs, rhs);
    }));
  }
  return rep;
}

CheckReport check_partial_module_algebra(const Algebra& a, const HopfAlgebra& h,
                                         const DualActionMap& act, bool symmetric) {
  require_dual_action_shapes(a, h, act);
  CheckReport rep;
  const std::size_t n = a.dim(), m = h.dim();
  rep.add(axiom_dual_unit("PMA-1", a, h, act));
  rep.add(axiom_dual_mult("PMA-2", a, h, act));

  // operator H -> A sending h to h ⇁ 1_A
  const Vec one_a = a.unit.col(0);
  LinearMap act_on_unit(n, m, a.field());
  for (std::size_t j = 0; j < m; ++j) {
    Vec v = act.apply(basis_vec(m, j, h.field()), one_a);
    for (std::size_t x = 0; x < n; ++x) act_on_unit.set(x, j, v[x]);
  }
  Axis hx{"h", m, &h.space()};
  Axis kx{"k", m, &h.space()};
  Axis ax{"a", n, &a.space};
  rep.add(check_identity(
      "PMA-3", {hx, kx, ax}, [&](const std::vector<std::size_t>& i) {
        Vec ka = act.pair_col(i[1], i[2]);
        Tensor lhs(act.apply(basis_vec(m, i[0], h.field()), ka), {n});
        LinearMap rk = right_mult_by_basis(h, i[1]);
        Tensor t = Tensor::outer(Tensor(h.delta().col(i[0]), {m, m}),
                                 Tensor(basis_vec(n, i[2], a.field()), {n}));
        Tensor rhs = t.apply(rk, 1)             // (h1,h2k,a)
                         .merged(1)
                         .apply(act.map, 1)     // (h1,y)
                         .apply(act_on_unit, 0) // (x,y)
                         .merged(0)
                         .apply(a.mul, 0);
        return std::make_pair(lhs, rhs);
      }));
  if (symmetric) {
    rep.add(check_identity(
        "PMA-4", {hx, kx, ax}, [&](const std::vector<std::size_t>& i) {
          Vec ka = act.pair_col(i[1], i[2]);
          Tensor lhs(act.apply(basis_vec(m, i[0], h.field()), ka), {n});
          LinearMap rk = right_mult_by_basis(h, i[1]);
          Tensor t = Tensor::outer(Tensor(h.delta().col(i[0]), {m, m}),
                                   Tensor(basis_vec(n, i[2], a.field()), {n}));
          Tensor rhs = t.apply(rk, 0)             // (h1k,h2,a)
                           .swap_adjacent(1)      // (h1k,a,h2)
                           .merged(0)
                           .apply(act.map, 0)     // (x,h2)
                           .apply(act_on_unit, 1) // (x,y)
                           .merged(0)
                           .apply(a.mul, 0);
          return std::make_pair(lhs, rhs);
        }));
  }
  return rep;
}

CheckReport check_compatibility_pairing(const Coalgebra& c, const HopfAlgebra& h,
                                        const ActionMap& act,
                                        const DualActionMap& dact) {
  require_action_shapes(c, h, act);
  if (dact.a_dim != c.dim() || dact.h_dim != h.dim()) {
    throw DimensionMismatch("dual action dims do not match the pairing");
  }
  CheckReport rep;
  Axis hx{"h", h.dim(), &h.space()};
  Axis ax{"alpha", c.dim(), &c.space};
  Axis cx{"c", c.dim(), &c.space};
  rep.add(check_identity(
      "pairing", {hx, ax, cx}, [&](const std::vector<std::size_t>& i) {
        Tensor lhs(Vec{dact.map.at(i[2], i[0] * c.dim() + i[1])}, {1});
        Tensor rhs(Vec{act.map.at(i[1], i[2] * h.dim() + i[0])}, {1});
        return std::make_pair(lhs, rhs);
      }));
  return rep;
}

}  // namespace halg
