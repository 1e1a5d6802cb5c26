#include "halg/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace halg {

namespace {

void validate_group(const GroupTable& g) {
  const std::size_t n = g.order;
  if (n == 0 || g.table.size() != n) throw InvalidGroupTable("empty or ragged table");
  for (const auto& row : g.table) {
    if (row.size() != n) throw InvalidGroupTable("ragged table");
    for (auto v : row) {
      if (v >= n) throw InvalidGroupTable("entry out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]]) {
          throw InvalidGroupTable("not associative");
        }
      }
    }
  }
  if (g.identity >= n) throw InvalidGroupTable("no identity");
  for (std::size_t i = 0; i < n; ++i) {
    if (g.table[g.identity][i] != i || g.table[i][g.identity] != i) {
      throw InvalidGroupTable("identity fails");
    }
  }
  if (g.inverse.size() != n) throw InvalidGroupTable("missing inverses");
  for (std::size_t i = 0; i < n; ++i) {
    if (g.table[i][g.inverse[i]] != g.identity ||
        g.table[g.inverse[i]][i] != g.identity) {
      throw InvalidGroupTable("inverse fails");
    }
  }
  if (g.labels.size() != n) throw InvalidGroupTable("missing labels");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.labels[i] == g.labels[j]) throw InvalidGroupTable("duplicate label");
    }
  }
}

std::vector<std::size_t> find_inverses(const std::vector<std::vector<std::size_t>>& t,
                                       std::size_t e) {
  const std::size_t n = t.size();
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] == e && t[j][i] == e) {
        inv[i] = j;
        break;
      }
    }
    if (inv[i] == n) throw InvalidGroupTable("element without inverse");
  }
  return inv;
}

std::size_t find_identity(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = t.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = t[e][i] == i && t[i][e] == i;
    }
    if (ok) return e;
  }
  throw InvalidGroupTable("no identity element");
}

}  // namespace

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroupTable("cyclic group of order 0");
  GroupTable g;
  g.order = n;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  }
  g.identity = 0;
  g.inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.inverse[i] = (n - i) % n;
  g.labels.push_back("e");
  for (std::size_t i = 1; i < n; ++i) {
    g.labels.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  }
  validate_group(g);
  return g;
}

GroupTable GroupTable::klein() {
  GroupTable g;
  g.order = 4;
  g.table.assign(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) g.table[i][j] = i ^ j;
  }
  g.identity = 0;
  g.inverse = {0, 1, 2, 3};
  g.labels = {"e", "a", "b", "c"};
  validate_group(g);
  return g;
}

GroupTable GroupTable::symmetric3() {
  // permutations of {0,1,2}; product = apply right factor first
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123)
      {2, 0, 1},  // (132)
  }};
  auto index_of = [&](const std::array<int, 3>& p) -> std::size_t {
    for (std::size_t k = 0; k < 6; ++k) {
      if (perms[k] == p) return k;
    }
    throw InvalidGroupTable("permutation lookup failed");
  };
  GroupTable g;
  g.order = 6;
  g.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> p;
      for (int x = 0; x < 3; ++x) p[x] = perms[i][perms[j][x]];
      g.table[i][j] = index_of(p);
    }
  }
  g.identity = 0;
  g.inverse = find_inverses(g.table, 0);
  g.labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  validate_group(g);
  return g;
}

GroupTable GroupTable::by_name(const std::string& name) {
  std::string s;
  for (char ch : name) s.push_back(static_cast<char>(std::tolower(ch)));
  if (s == "klein" || s == "v4") return klein();
  if (s == "s3") return symmetric3();
  if (s.size() >= 2 && s[0] == 'z') {
    std::size_t n = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw ParseError("unknown group '" + name + "'");
      }
      n = n * 10 + static_cast<std::size_t>(s[i] - '0');
    }
    if (n < 1 || n > 12) throw ParseError("cyclic order must be 1..12");
    return cyclic(n);
  }
  throw ParseError("unknown group '" + name + "'");
}

GroupTable GroupTable::from_table(std::vector<std::vector<std::size_t>> table,
                                  std::vector<std::string> labels) {
  GroupTable g;
  g.order = table.size();
  g.table = std::move(table);
  g.identity = find_identity(g.table);
  g.inverse = find_inverses(g.table, g.identity);
  if (labels.empty()) {
    for (std::size_t i = 0; i < g.order; ++i) labels.push_back("g" + std::to_string(i));
  }
  g.labels = std::move(labels);
  validate_group(g);
  return g;
}

std::size_t GroupTable::element_by_label(const std::string& label) const {
  for (std::size_t i = 0; i < order; ++i) {
    if (labels[i] == label) return i;
  }
  throw ParseError("no group element labelled '" + label + "'");
}

HopfAlgebra group_algebra(const GroupTable& g, const FieldSpec& f) {
  validate_group(g);
  const std::size_t n = g.order;
  VectorSpace space{n, f, g.labels};
  Algebra alg{space, LinearMap(n, n * n, f), LinearMap(n, 1, f)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      alg.mul.set(g.table[i][j], i * n + j, Scalar::one(f));
    }
  }
  alg.unit.set(g.identity, 0, Scalar::one(f));
  Coalgebra coalg{space, LinearMap(n * n, n, f), LinearMap(1, n, f)};
  for (std::size_t i = 0; i < n; ++i) {
    coalg.delta.set(i * n + i, i, Scalar::one(f));
    coalg.epsilon.set(0, i, Scalar::one(f));
  }
  auto h = compute_antipode(Bialgebra{alg, coalg});
  if (!h) throw InternalInvariant("group algebra has no antipode");
  return *h;
}

ActionMap subgroup_partial_action_on_k(const GroupTable& g,
                                       const std::vector<std::size_t>& n,
                                       const FieldSpec& f) {
  ActionMap out;
  out.c_dim = 1;
  out.h_dim = g.order;
  out.map = LinearMap(1, g.order, f);
  for (auto idx : n) {
    if (idx >= g.order) throw ParseError("subset element out of range");
    out.map.set(0, idx, Scalar::one(f));
  }
  return out;
}

CoactionMap subgroup_partial_coaction_on_k(const GroupTable& g,
                                           const std::vector<std::size_t>& n,
                                           const FieldSpec& f) {
  if (n.empty()) throw ParseError("subset must contain the identity");
  const std::uint64_t ch = f.characteristic();
  if (ch != 0 && n.size() % ch == 0) {
    throw CharacteristicDividesOrder("characteristic " + std::to_string(ch) +
                                     " divides subset order " +
                                     std::to_string(n.size()));
  }
  CoactionMap out;
  out.h_dim = g.order;
  out.c_dim = 1;
  out.map = LinearMap(g.order, 1, f);
  Scalar w = Scalar::of_int(f, static_cast<long>(n.size())).inv();
  for (auto idx : n) {
    if (idx >= g.order) throw ParseError("subset element out of range");
    out.map.set(idx, 0, w);
  }
  return out;
}

ActionMap regular_module_coalgebra(const HopfAlgebra& h) {
  ActionMap out;
  out.c_dim = h.dim();
  out.h_dim = h.dim();
  out.map = h.mul();
  return out;
}

ActionMap tensor_module_coalgebra(const Coalgebra& c, const Coalgebra& d,
                                  const ActionMap& act_d) {
  if (act_d.c_dim != d.dim()) throw DimensionMismatch("action does not act on D");
  const std::size_t nc = c.dim(), nd = d.dim(), m = act_d.h_dim;
  ActionMap out;
  out.c_dim = nc * nd;
  out.h_dim = m;
  out.map = LinearMap(nc * nd, nc * nd * m, c.field());
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nd; ++b) {
      for (std::size_t hh = 0; hh < m; ++hh) {
        const std::size_t src = (a * nd + b) * m + hh;
        for (std::size_t x = 0; x < nd; ++x) {
          const Scalar& v = act_d.map.at(x, b * m + hh);
          if (v.is_zero()) continue;
          out.map.set(a * nd + x, src, v);
        }
      }
    }
  }
  return out;
}

CoactionMap adjoint_coaction(const HopfAlgebra& h) {
  const std::size_t m = h.dim();
  CoactionMap out;
  out.h_dim = m;
  out.c_dim = m;
  out.map = LinearMap(m * m, m, h.field());
  for (std::size_t j = 0; j < m; ++j) {
    Vec v = Tensor(h.delta().col(j), {m, m})
                .apply(h.delta(), 1)
                .split(1, m, m)       // (h1,h2,h3)
                .apply(h.antipode, 2) // (h1,h2,S h3)
                .swap_adjacent(1)     // (h1,S h3,h2)
                .merged(0)
                .apply(h.mul(), 0)    // (h1 S(h3), h2)
                .data();
    for (std::size_t k = 0; k < m * m; ++k) out.map.set(k, j, v[k]);
  }
  return out;
}

CoactionMap trivial_coaction(const Coalgebra& d, const HopfAlgebra& h) {
  const std::size_t n = d.dim(), m = h.dim();
  const Vec one = h.one();
  CoactionMap out;
  out.h_dim = m;
  out.c_dim = n;
  out.map = LinearMap(m * n, n, d.field());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (one[i].is_zero()) continue;
      out.map.set(i * n + j, j, one[i]);
    }
  }
  return out;
}

Coalgebra dual_coalgebra_of(const HopfAlgebra& h) {
  return dual_coalgebra(h.algebra());
}

CoactionMap dual_basis_comodule(const HopfAlgebra& h) {
  const std::size_t m = h.dim();
  // convolution product of H* is the transpose of Delta_H
  LinearMap mul_star = h.delta().transpose();
  CoactionMap out;
  out.h_dim = m;
  out.c_dim = m;
  out.map = LinearMap(m * m, m, h.field());
  for (std::size_t ff = 0; ff < m; ++ff) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t r = 0; r < m; ++r) {
        const Scalar& v = mul_star.at(r, ff * m + i);  // (f * h_i^*)_r
        if (v.is_zero()) continue;
        out.map.set(i * m + r, ff, v);
      }
    }
  }
  return out;
}

CoactionMap tensor_comodule_coalgebra(const Coalgebra& c, const CoactionMap& co_c,
                                      const Coalgebra& d) {
  if (co_c.c_dim != c.dim()) throw DimensionMismatch("coaction does not act on C");
  const std::size_t nc = c.dim(), nd = d.dim(), m = co_c.h_dim;
  CoactionMap out;
  out.h_dim = m;
  out.c_dim = nc * nd;
  out.map = LinearMap(m * nc * nd, nc * nd, c.field());
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nd; ++b) {
      const std::size_t src = a * nd + b;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t x = 0; x < nc; ++x) {
          const Scalar& v = co_c.map.at(i * nc + x, a);
          if (v.is_zero()) continue;
          out.map.set(i * (nc * nd) + (x * nd + b), src, v);
        }
      }
    }
  }
  return out;
}

}  // namespace halg
