#include "halg/globalization.hpp"

#include "halg/axiom.hpp"

namespace halg {

namespace {

void require_triple_shapes(const Coalgebra& c, const Coalgebra& d,
                           const LinearMap& theta, const LinearMap& pi) {
  if (theta.rows() != d.dim() || theta.cols() != c.dim()) {
    throw DimensionMismatch("theta must be D x C");
  }
  if (pi.rows() != d.dim() || pi.cols() != d.dim()) {
    throw DimensionMismatch("pi must be D x D");
  }
}

// theta injective coalgebra morphism; pi comultiplicative projection onto
// the image of theta.
CheckReport embedding_projection_hypotheses(const Coalgebra& c, const Coalgebra& d,
                                            const LinearMap& theta,
                                            const LinearMap& pi) {
  CheckReport rep;
  rep.add_flag("theta:injective", rank(theta) == c.dim());
  rep.merge("theta", check_comultiplicative(theta, c, d, true));
  rep.add_flag("pi:idempotent", compose(pi, pi) == pi);
  rep.add_flag("pi:fixes-theta", compose(pi, theta) == theta);
  Subspace img(d.dim(), d.field());
  for (std::size_t j = 0; j < c.dim(); ++j) img.add(theta.col(j));
  bool inside = true;
  for (std::size_t j = 0; j < d.dim() && inside; ++j) {
    inside = img.contains(pi.col(j));
  }
  rep.add_flag("pi:image-in-theta", inside);
  rep.merge("pi", check_comultiplicative(pi, d, d, false));
  return rep;
}

}  // namespace

CheckReport globalization_hypotheses_pmc(const Coalgebra& c, const HopfAlgebra& h,
                                         const ActionMap& act, const Coalgebra& d,
                                         const ActionMap& act_global,
                                         const LinearMap& theta, const LinearMap& pi) {
  require_action_shapes(c, h, act);
  require_action_shapes(d, h, act_global);
  require_triple_shapes(c, d, theta, pi);
  CheckReport rep;
  rep.merge("C", check_coalgebra(c));
  rep.merge("D", check_coalgebra(d));
  rep.merge("pmc", check_partial_module_coalgebra(c, h, act, false));
  rep.merge("mc", check_module_coalgebra(d, h, act_global));
  rep.merge("", embedding_projection_hypotheses(c, d, theta, pi));
  return rep;
}

CheckReport verify_globalization_pmc(const Coalgebra& c, const HopfAlgebra& h,
                                     const ActionMap& act, const Coalgebra& d,
                                     const ActionMap& act_global,
                                     const LinearMap& theta, const LinearMap& pi) {
  CheckReport rep =
      globalization_hypotheses_pmc(c, h, act, d, act_global, theta, pi);
  const std::size_t nd = d.dim(), m = h.dim();
  const Vec eps_pi = compose(d.epsilon, pi).row(0);
  Axis dx{"d", nd, &d.space};
  Axis hx{"h", m, &h.space()};
  Axis cx{"c", c.dim(), &c.space};

  rep.add(check_identity(
      "GMC-1", {dx, hx}, [&](const std::vector<std::size_t>& i) {
        Vec eh = basis_vec(m, i[1], h.field());
        Vec lhs = pi.apply(act_global.apply(pi.col(i[0]), eh));
        Vec v = Tensor(d.delta.col(i[0]), {nd, nd}).contract(eps_pi, 0).data();
        Vec rhs = pi.apply(act_global.apply(v, eh));
        return std::make_pair(Tensor(lhs, {nd}), Tensor(rhs, {nd}));
      }));
  rep.add(check_identity(
      "GMC-2", {cx, hx}, [&](const std::vector<std::size_t>& i) {
        Vec lhs = theta.apply(act.pair_col(i[0], i[1]));
        Vec rhs = pi.apply(
            act_global.apply(theta.col(i[0]), basis_vec(m, i[1], h.field())));
        return std::make_pair(Tensor(lhs, {nd}), Tensor(rhs, {nd}));
      }));
  {
    std::vector<Vec> seed;
    for (std::size_t j = 0; j < c.dim(); ++j) seed.push_back(theta.col(j));
    Subspace gen = span_closure(nd, d.field(), seed, [&](const Vec& v) {
      std::vector<Vec> out;
      for (std::size_t g = 0; g < m; ++g) {
        out.push_back(act_global.apply(v, basis_vec(m, g, h.field())));
      }
      return out;
    });
    rep.add_flag("GMC-3", gen.dim() == nd,
                 "generated submodule has dimension " + std::to_string(gen.dim()) +
                     " of " + std::to_string(nd));
  }
  return rep;
}

GlobalizationPMC standard_globalization_pmc(const Coalgebra& c, const HopfAlgebra& h,
                                            const ActionMap& act) {
  CheckReport pmc = check_partial_module_coalgebra(c, h, act, false);
  if (!pmc.pass()) {
    throw NotPartialModuleCoalgebra("standard globalization needs a partial action:\n" +
                                    pmc.summary());
  }
  const std::size_t n = c.dim(), m = h.dim(), nd = n * m;
  const FieldSpec f = c.field();
  GlobalizationPMC g;
  g.D = tensor_coalgebra(c, h.coalgebra());
  // (c⊗h) ⇀ k = c ⊗ hk
  g.act_global.c_dim = nd;
  g.act_global.h_dim = m;
  g.act_global.map = LinearMap(nd, nd * m, f);
  for (std::size_t cc = 0; cc < n; ++cc) {
    for (std::size_t hh = 0; hh < m; ++hh) {
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t src = (cc * m + hh) * m + k;
        for (std::size_t r = 0; r < m; ++r) {
          const Scalar& v = h.mul().at(r, hh * m + k);
          if (v.is_zero()) continue;
          g.act_global.map.set(cc * m + r, src, v);
        }
      }
    }
  }
  const Vec one = h.one();
  g.theta = LinearMap(nd, n, f);
  for (std::size_t cc = 0; cc < n; ++cc) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!one[j].is_zero()) g.theta.set(cc * m + j, cc, one[j]);
    }
  }
  g.pi = LinearMap(nd, nd, f);
  for (std::size_t cc = 0; cc < n; ++cc) {
    for (std::size_t hh = 0; hh < m; ++hh) {
      Vec w = act.pair_col(cc, hh);
      for (std::size_t a = 0; a < n; ++a) {
        if (w[a].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (one[j].is_zero()) continue;
          g.pi.set(a * m + j, cc * m + hh, w[a] * one[j]);
        }
      }
    }
  }
  g.report = verify_globalization_pmc(c, h, act, g.D, g.act_global, g.theta, g.pi);
  return g;
}

DualGlobalization dual_globalization(const Coalgebra& c, const HopfAlgebra& h,
                                     const ActionMap& act, const GlobalizationPMC& g) {
  CheckReport rep;
  rep.merge("hyp", globalization_hypotheses_pmc(c, h, act, g.D, g.act_global,
                                                g.theta, g.pi));
  const std::size_t n = c.dim(), nd = g.D.dim(), m = h.dim();
  const FieldSpec f = c.field();

  // global action of H on D*: (h ⇁ xi)(d) = xi(d ⇀ h)
  DualActionMap dstar;
  dstar.h_dim = m;
  dstar.a_dim = nd;
  dstar.map = LinearMap(nd, m * nd, f);
  for (std::size_t xi = 0; xi < nd; ++xi) {
    for (std::size_t hh = 0; hh < m; ++hh) {
      for (std::size_t dd = 0; dd < nd; ++dd) {
        dstar.map.set(dd, hh * nd + xi, g.act_global.map.at(xi, dd * m + hh));
      }
    }
  }

  if (rank(g.theta) != n) {
    rep.add_flag("phi-construction", false, "theta is not injective");
    return DualGlobalization{LinearMap(nd, n, f), Subspace(nd, f), dstar, rep};
  }
  LinearMap theta_inv = left_inverse_on_image(g.theta);
  LinearMap phi = compose(theta_inv, g.pi).transpose();  // nd x n

  Algebra dstar_alg = dual_algebra(g.D);
  Algebra cstar_alg = dual_algebra(c);
  rep.merge("Dstar", check_module_algebra(dstar_alg, h, dstar));

  auto dstar_mul = [&](const Vec& a, const Vec& b) {
    return Tensor::outer(Tensor(a, {nd}), Tensor(b, {nd}))
        .merged(0)
        .apply(dstar_alg.mul, 0)
        .data();
  };

  Axis ax{"alpha", n, &cstar_alg.space};
  Axis bx{"beta", n, &cstar_alg.space};
  Axis hx{"h", m, &h.space()};
  rep.add(check_identity(
      "phi:multiplicative", {ax, bx}, [&](const std::vector<std::size_t>& i) {
        Vec lhs = phi.apply(cstar_alg.mul.col(i[0] * n + i[1]));
        Vec rhs = dstar_mul(phi.col(i[0]), phi.col(i[1]));
        return std::make_pair(Tensor(lhs, {nd}), Tensor(rhs, {nd}));
      }));
  rep.add_flag("phi:injective", rank(phi) == n);

  // B = the H-module algebra generated by phi(C*)
  std::vector<Vec> seed;
  for (std::size_t a = 0; a < n; ++a) seed.push_back(phi.col(a));
  Subspace b_sub = span_closure(nd, f, seed, [&](const Vec& v) {
    std::vector<Vec> out;
    for (std::size_t hh = 0; hh < m; ++hh) {
      out.push_back(dstar.apply(basis_vec(m, hh, f), v));
    }
    return out;
  });
  {
    Subspace one_step(nd, f);
    for (std::size_t hh = 0; hh < m; ++hh) {
      for (std::size_t a = 0; a < n; ++a) {
        one_step.add(dstar.apply(basis_vec(m, hh, f), phi.col(a)));
      }
    }
    rep.add_flag("GMA-3", one_step.dim() == b_sub.dim(),
                 "H ⇁ phi(C*) spans " + std::to_string(one_step.dim()) +
                     ", closure has " + std::to_string(b_sub.dim()));
  }
  {
    CheckEntry e;
    e.axiom = "B:multiplication-closed";
    for (std::size_t i = 0; i < b_sub.dim(); ++i) {
      for (std::size_t j = 0; j < b_sub.dim(); ++j) {
        ++e.checked;
        Vec prod = dstar_mul(b_sub.basis()[i], b_sub.basis()[j]);
        if (!b_sub.contains(prod)) {
          ++e.failed;
          if (!e.witness) {
            e.witness = Witness{"i=" + std::to_string(i) + " j=" + std::to_string(j),
                                vec_str(prod), "membership in B"};
          }
        }
      }
    }
    e.pass = e.failed == 0;
    rep.add(e);
  }
  {
    Subspace phi_img(nd, f);
    for (std::size_t a = 0; a < n; ++a) phi_img.add(phi.col(a));
    CheckEntry e;
    e.axiom = "GMA-1";
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t j = 0; j < b_sub.dim(); ++j) {
        ++e.checked;
        Vec prod = dstar_mul(phi.col(a), b_sub.basis()[j]);
        if (!phi_img.contains(prod)) {
          ++e.failed;
          if (!e.witness) {
            e.witness = Witness{"alpha=" + cstar_alg.space.label(a) +
                                    " b=" + std::to_string(j),
                                vec_str(prod), "membership in phi(C*)"};
          }
        }
      }
    }
    e.pass = e.failed == 0;
    rep.add(e);
  }
  {
    DualActionMap cstar_act = dual_action_on_dual(c, h, act);
    Vec eps_c = c.epsilon.row(0);  // counit of C as an element of C*
    Vec phi_eps = phi.apply(eps_c);
    rep.add(check_identity(
        "GMA-2", {hx, ax}, [&](const std::vector<std::size_t>& i) {
          Vec lhs = phi.apply(
              cstar_act.apply(basis_vec(m, i[0], f), basis_vec(n, i[1], f)));
          Vec rhs =
              dstar_mul(phi_eps, dstar.apply(basis_vec(m, i[0], f), phi.col(i[1])));
          return std::make_pair(Tensor(lhs, {nd}), Tensor(rhs, {nd}));
        }));
  }
  return DualGlobalization{phi, b_sub, dstar, rep};
}

CheckReport adjoint_psi_check(const Coalgebra& c, const HopfAlgebra& h,
                              const ActionMap& act, const GlobalizationPMC& g) {
  const std::size_t n = c.dim(), m = h.dim(), nd = n * m;
  if (g.D.dim() != nd) {
    throw NotStandardForm("D is not C ⊗ H");
  }
  {
    Coalgebra expected = tensor_coalgebra(c, h.coalgebra());
    GlobalizationPMC std_g = standard_globalization_pmc(c, h, act);
    if (g.D.delta != expected.delta || g.D.epsilon != expected.epsilon ||
        g.theta != std_g.theta || g.pi != std_g.pi ||
        g.act_global.map != std_g.act_global.map) {
      throw NotStandardForm("triple is not the standard globalization");
    }
  }
  CheckReport rep;
  const FieldSpec f = c.field();

  // The adjoint identification of (C⊗H)* with maps H -> C* is the identity
  // on coordinates; the content of the isomorphism is that the convolution
  // algebra of (C⊗H)* and the convolution-type algebra of maps H -> C*
  // have identical structure constants.
  Algebra dstar_alg = dual_algebra(g.D);
  LinearMap hom_mul(nd, nd * nd, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t row = i * m + j;
      for (std::size_t i1 = 0; i1 < n; ++i1) {
        for (std::size_t i2 = 0; i2 < n; ++i2) {
          const Scalar& dc = c.delta.at(i1 * n + i2, i);
          if (dc.is_zero()) continue;
          for (std::size_t j1 = 0; j1 < m; ++j1) {
            for (std::size_t j2 = 0; j2 < m; ++j2) {
              const Scalar& dh = h.delta().at(j1 * m + j2, j);
              if (dh.is_zero()) continue;
              const std::size_t col = (i1 * m + j1) * nd + (i2 * m + j2);
              hom_mul.set(row, col, dc * dh);
            }
          }
        }
      }
    }
  }
  LinearMap hom_unit(nd, 1, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      hom_unit.set(i * m + j, 0, c.epsilon.at(0, i) * h.epsilon().at(0, j));
    }
  }
  rep.add_flag("psi:bijective", rank(LinearMap::identity(nd, f)) == nd);
  rep.add_flag("psi:algebra-iso",
               dstar_alg.mul == hom_mul && dstar_alg.unit == hom_unit);

  // action of H on (C⊗H)* dual to right multiplication, against the action
  // (h ▷ F)(k) = F(kh) on maps H -> C*
  LinearMap act_dual(nd, m * nd, f);
  for (std::size_t xi = 0; xi < nd; ++xi) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t dd = 0; dd < nd; ++dd) {
        act_dual.set(dd, a * nd + xi, g.act_global.map.at(xi, dd * m + a));
      }
    }
  }
  LinearMap act_hom(nd, m * nd, f);
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t j1 = 0; j1 < m; ++j1) {
      const std::size_t xi = i1 * m + j1;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t j = 0; j < m; ++j) {
          const Scalar& v = h.mul().at(j1, j * m + a);
          if (v.is_zero()) continue;
          act_hom.set(i1 * m + j, a * nd + xi, v);
        }
      }
    }
  }
  rep.add_flag("psi:module-map", act_dual == act_hom);

  // Psi ∘ phi sends alpha to the map h -> h ⇀ alpha
  LinearMap theta_inv = left_inverse_on_image(g.theta);
  rep.add_flag("psi-phi-equals-Phi", compose(theta_inv, g.pi) == act.map);
  return rep;
}

CheckReport verify_globalization_pcc(const Coalgebra& c, const HopfAlgebra& h,
                                     const CoactionMap& co, const Coalgebra& d,
                                     const CoactionMap& co_global,
                                     const LinearMap& theta, const LinearMap& pi) {
  require_coaction_shapes(c, h, co);
  require_coaction_shapes(d, h, co_global);
  require_triple_shapes(c, d, theta, pi);
  CheckReport rep;
  rep.merge("C", check_coalgebra(c));
  rep.merge("D", check_coalgebra(d));
  rep.merge("pcc", check_partial_comodule_coalgebra(c, h, co, false));
  rep.merge("cc", check_comodule_coalgebra(d, h, co_global));
  rep.merge("", embedding_projection_hypotheses(c, d, theta, pi));

  const std::size_t nd = d.dim(), nc = c.dim(), m = h.dim();
  const Vec eps_pi = compose(d.epsilon, pi).row(0);
  Axis dx{"d", nd, &d.space};
  Axis cx{"c", nc, &c.space};

  rep.add(check_identity("GCC-1", {dx}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs = Tensor(co_global.map.apply(pi.col(i[0])), {m, nd}).apply(pi, 1);
    Vec v = Tensor(d.delta.col(i[0]), {nd, nd}).contract(eps_pi, 0).data();
    Tensor rhs = Tensor(co_global.map.apply(v), {m, nd}).apply(pi, 1);
    return std::make_pair(lhs, rhs);
  }));
  rep.add(check_identity("GCC-2", {cx}, [&](const std::vector<std::size_t>& i) {
    Tensor lhs = Tensor(co_global.map.apply(theta.col(i[0])), {m, nd}).apply(pi, 1);
    Tensor rhs = Tensor(co.col(i[0]), {m, nc}).apply(theta, 1);
    return std::make_pair(lhs, rhs);
  }));
  {
    std::vector<Vec> seed;
    for (std::size_t j = 0; j < nc; ++j) seed.push_back(theta.col(j));
    Subspace gen = span_closure(nd, d.field(), seed, [&](const Vec& v) {
      std::vector<Vec> out;
      Tensor dv(d.delta.apply(v), {nd, nd});
      for (std::size_t k = 0; k < nd; ++k) {
        Vec probe = basis_vec(nd, k, d.field());
        out.push_back(dv.contract(probe, 0).data());
        out.push_back(dv.contract(probe, 1).data());
      }
      Tensor lv(co_global.map.apply(v), {m, nd});
      for (std::size_t j = 0; j < m; ++j) {
        out.push_back(lv.contract(basis_vec(m, j, d.field()), 0).data());
      }
      return out;
    });
    rep.add_flag("GCC-3", gen.dim() == nd,
                 "generated subcomodule coalgebra has dimension " +
                     std::to_string(gen.dim()) + " of " + std::to_string(nd));
  }
  return rep;
}

GlobalizationPCC standard_globalization_pcc(const Coalgebra& c, const HopfAlgebra& h,
                                            const CoactionMap& co) {
  CheckReport pcc = check_partial_comodule_coalgebra(c, h, co, false);
  if (!pcc.pass()) {
    throw NotPartialComoduleCoalgebra(
        "standard globalization needs a partial coaction:\n" + pcc.summary());
  }
  const std::size_t n = c.dim(), m = h.dim();
  const FieldSpec f = c.field();
  HopfAlgebra hs = dual_hopf(h);
  ActionMap act = coaction_to_action(c, h, co);
  if (!check_partial_module_coalgebra(c, hs, act, false).pass()) {
    throw InternalInvariant("induced dual action is not a partial action");
  }
  GlobalizationPMC base = standard_globalization_pmc(c, hs, act);

  GlobalizationPCC g;
  g.D = base.D;
  g.theta = base.theta;
  g.pi = base.pi;
  // dual-basis coaction on C ⊗ H*: c⊗f -> Σ_i h_i ⊗ c ⊗ f∗h_i*
  const std::size_t nd = n * m;
  const LinearMap& mul_star = hs.mul();
  g.co_global.h_dim = m;
  g.co_global.c_dim = nd;
  g.co_global.map = LinearMap(m * nd, nd, f);
  for (std::size_t cc = 0; cc < n; ++cc) {
    for (std::size_t ff = 0; ff < m; ++ff) {
      const std::size_t src = cc * m + ff;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t r = 0; r < m; ++r) {
          const Scalar& v = mul_star.at(r, ff * m + i);
          if (v.is_zero()) continue;
          g.co_global.map.set(i * nd + (cc * m + r), src, v);
        }
      }
    }
  }
  g.report.add_flag("separates-points", separates_points(h));
  g.report.merge(
      "gcc", verify_globalization_pcc(c, h, co, g.D, g.co_global, g.theta, g.pi));
  g.report.merge("rationality", rationality_consistency_check(c, h, g.co_global));
  return g;
}

CheckReport rationality_consistency_check(const Coalgebra& c, const HopfAlgebra& h,
                                          const CoactionMap& co_d) {
  const std::size_t n = c.dim(), m = h.dim(), nd = n * m;
  if (co_d.c_dim != nd || co_d.h_dim != m) {
    throw NotStandardForm("coaction does not live on C ⊗ H*");
  }
  const FieldSpec f = c.field();
  LinearMap mul_star = h.delta().transpose();
  CheckReport rep;
  Axis cx{"c", n, &c.space};
  Axis fx{"f", m, nullptr};
  Axis gx{"g", m, nullptr};
  rep.add(check_identity(
      "rational-coaction", {cx, fx, gx}, [&](const std::vector<std::size_t>& i) {
        Tensor lhs = Tensor(co_d.col(i[0] * m + i[1]), {m, nd})
                         .contract(basis_vec(m, i[2], f), 0);
        Vec w = mul_star.col(i[1] * m + i[2]);
        Vec rhs = zeros(nd, f);
        for (std::size_t r = 0; r < m; ++r) rhs[i[0] * m + r] = w[r];
        return std::make_pair(lhs, Tensor(rhs, {nd}));
      }));
  return rep;
}

CheckReport cross_check_pcc_to_pmc(const Coalgebra& c, const HopfAlgebra& h,
                                   const CoactionMap& co, const GlobalizationPCC& g) {
  CheckReport rep;
  rep.add_flag("separates-points", separates_points(h));
  HopfAlgebra hs = dual_hopf(h);
  ActionMap act_c = coaction_to_action(c, h, co);
  ActionMap act_d = coaction_to_action(g.D, h, g.co_global);
  rep.merge("gmc", verify_globalization_pmc(c, hs, act_c, g.D, act_d, g.theta, g.pi));
  return rep;
}

}  // namespace halg
