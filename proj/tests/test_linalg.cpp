#include <doctest.h>

#include <random>

#include "halg/linalg.hpp"

using namespace halg;

namespace {

LinearMap random_map(std::size_t rows, std::size_t cols, const FieldSpec& f,
                     std::mt19937_64& rng) {
  LinearMap m(rows, cols, f);
  std::uniform_int_distribution<long> v(-4, 4);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Scalar::of_int(f, v(rng)));
  }
  return m;
}

// independent oracle for matrix products: naive dot products, no shortcuts
LinearMap naive_product(const LinearMap& f, const LinearMap& g) {
  LinearMap out(f.rows(), g.cols(), f.field());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Scalar acc = Scalar::zero(f.field());
      for (std::size_t k = 0; k < f.cols(); ++k) acc += f.at(i, k) * g.at(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("compose matches the entry-by-entry oracle") {
  std::mt19937_64 rng(11);
  FieldSpec q = FieldSpec::rationals();
  LinearMap f = random_map(3, 4, q, rng);
  LinearMap g = random_map(4, 2, q, rng);
  CHECK(compose(f, g) == naive_product(f, g));
  CHECK(compose(LinearMap::identity(3, q), f) == f);
  for (int i = 0; i < 20; ++i) {
    LinearMap a = random_map(4, 5, FieldSpec::prime(5), rng);
    LinearMap b = random_map(5, 3, FieldSpec::prime(5), rng);
    CHECK(compose(a, b) == naive_product(a, b));
  }
  CHECK_THROWS_AS(compose(f, f), DimensionMismatch);
}

TEST_CASE("kron") {
  std::mt19937_64 rng(12);
  FieldSpec q = FieldSpec::rationals();
  CHECK(kron(LinearMap::identity(2, q), LinearMap::identity(2, q)) ==
        LinearMap::identity(4, q));
  // kron(f,g)·kron(u,v) = kron(f·u, g·v), both sides computed independently
  for (int i = 0; i < 10; ++i) {
    LinearMap f = random_map(2, 3, q, rng), u = random_map(3, 2, q, rng);
    LinearMap g = random_map(3, 2, q, rng), v = random_map(2, 2, q, rng);
    CHECK(compose(kron(f, g), kron(u, v)) == kron(compose(f, u), compose(g, v)));
  }
  LinearMap f = random_map(3, 4, q, rng);
  CHECK(kron(LinearMap::identity(1, q), f) == f);
  CHECK(kron(f, LinearMap::identity(1, q)) == f);
}

TEST_CASE("flip") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(LinearMap::flip(1, 5, q) == LinearMap::identity(5, q));
  CHECK(compose(LinearMap::flip(3, 2, q), LinearMap::flip(2, 3, q)) ==
        LinearMap::identity(6, q));
  // e0⊗e1 -> e1⊗e0 for 2x2
  Vec v = zeros(4, q);
  v[0 * 2 + 1] = Scalar::one(q);
  Vec w = LinearMap::flip(2, 2, q).apply(v);
  CHECK(w[1 * 2 + 0] == Scalar::one(q));
  CHECK(is_zero_vec(Vec{w[0], w[1], w[3]}));
  // permutation matrix property: one 1 per row and per column
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{2, 3}, {4, 5}, {1, 7}}) {
    LinearMap p = LinearMap::flip(a, b, q);
    for (std::size_t i = 0; i < p.rows(); ++i) {
      std::size_t row_ones = 0, col_ones = 0;
      for (std::size_t j = 0; j < p.cols(); ++j) {
        if (!p.at(i, j).is_zero()) {
          CHECK(p.at(i, j).is_one());
          ++row_ones;
        }
        if (!p.at(j, i).is_zero()) ++col_ones;
      }
      CHECK(row_ones == 1);
      CHECK(col_ones == 1);
    }
  }
}

TEST_CASE("solve") {
  std::mt19937_64 rng(13);
  FieldSpec q = FieldSpec::rationals();
  SUBCASE("identity system returns b") {
    Vec b = {Scalar::of_int(q, 3), Scalar::of_fraction(q, 1, 2)};
    SolveResult r = solve(LinearMap::identity(2, q), b);
    REQUIRE(r.consistent);
    CHECK(r.particular == b);
    CHECK(r.nullspace.empty());
  }
  SUBCASE("inconsistent system") {
    LinearMap a(2, 1, q);
    a.set(0, 0, Scalar::one(q));
    a.set(1, 0, Scalar::one(q));
    Vec b = {Scalar::zero(q), Scalar::one(q)};
    CHECK_FALSE(solve(a, b).consistent);
  }
  SUBCASE("random invertible system verified by substitution") {
    for (int rep = 0; rep < 20; ++rep) {
      LinearMap a = random_map(4, 4, q, rng);
      if (rank(a) < 4) continue;
      Vec b;
      for (int i = 0; i < 4; ++i) b.push_back(Scalar::of_int(q, i - 2));
      SolveResult r = solve(a, b);
      REQUIRE(r.consistent);
      CHECK(a.apply(r.particular) == b);
      CHECK(r.nullspace.empty());
    }
  }
  SUBCASE("matrix right-hand sides") {
    for (int rep = 0; rep < 10; ++rep) {
      LinearMap a = random_map(4, 4, q, rng);
      if (rank(a) < 4) continue;
      LinearMap b = random_map(4, 3, q, rng);
      MatrixSolveResult r = solve(a, b);
      REQUIRE(r.consistent);
      CHECK(compose(a, r.solution) == b);
      CHECK(r.nullspace.empty());
    }
    LinearMap a(2, 1, q);
    a.set(0, 0, Scalar::one(q));
    a.set(1, 0, Scalar::one(q));
    LinearMap b(2, 2, q);
    b.set(0, 0, Scalar::one(q));  // first column inconsistent
    CHECK_FALSE(solve(a, b).consistent);
  }
  SUBCASE("rank-nullity on random matrices") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
      for (int rep = 0; rep < 30; ++rep) {
        LinearMap a = random_map(3, 5, f, rng);
        SolveResult r = solve(a, zeros(3, f));
        REQUIRE(r.consistent);
        CHECK(rank(a) + r.nullspace.size() == 5);
        for (const Vec& v : r.nullspace) CHECK(is_zero_vec(a.apply(v)));
      }
    }
  }
}

TEST_CASE("left inverse on image") {
  std::mt19937_64 rng(14);
  FieldSpec q = FieldSpec::rationals();
  CHECK(left_inverse_on_image(LinearMap::identity(3, q)) ==
        LinearMap::identity(3, q));
  // inclusion of the first coordinate into a 2-dim space
  LinearMap incl(2, 1, q);
  incl.set(0, 0, Scalar::one(q));
  LinearMap g = left_inverse_on_image(incl);
  CHECK(g.at(0, 0).is_one());
  CHECK(g.at(0, 1).is_zero());
  for (int rep = 0; rep < 20; ++rep) {
    LinearMap f = random_map(5, 3, q, rng);
    if (rank(f) < 3) continue;
    CHECK(compose(left_inverse_on_image(f), f) == LinearMap::identity(3, q));
  }
  LinearMap sq(2, 2, q);
  sq.set(0, 0, Scalar::one(q));
  CHECK_THROWS_AS(left_inverse_on_image(sq), NotInjective);
}

TEST_CASE("span closure") {
  FieldSpec q = FieldSpec::rationals();
  SUBCASE("seed spanning the ambient space") {
    Subspace s = span_closure(2, q, {basis_vec(2, 0, q), basis_vec(2, 1, q)},
                              [](const Vec&) { return std::vector<Vec>{}; });
    CHECK(s.dim() == 2);
  }
  SUBCASE("zero step keeps the seed span") {
    Vec v = {Scalar::one(q), Scalar::one(q), Scalar::zero(q)};
    Subspace s = span_closure(3, q, {v}, [&](const Vec&) {
      return std::vector<Vec>{zeros(3, q)};
    });
    CHECK(s.dim() == 1);
    CHECK(s.contains(v));
  }
  SUBCASE("translation step generates the group algebra") {
    // step sends v = (a,b) to v·g = (b,a); seed {e0}; closure must be
    // everything: row-reducing {e0, e1} by hand gives the full space
    auto step = [&](const Vec& v) {
      return std::vector<Vec>{Vec{v[1], v[0]}};
    };
    Subspace s = span_closure(2, q, {basis_vec(2, 0, q)}, step);
    CHECK(s.dim() == 2);
  }
  SUBCASE("closing a closed subspace is the identity") {
    auto step = [&](const Vec& v) {
      return std::vector<Vec>{Vec{v[1], v[0], v[2]}};
    };
    Subspace s1 = span_closure(3, q, {basis_vec(3, 0, q)}, step);
    std::vector<Vec> basis = s1.basis();
    Subspace s2 = span_closure(3, q, basis, step);
    CHECK(s2.dim() == s1.dim());
    for (const Vec& v : s1.basis()) CHECK(s2.contains(v));
    for (const Vec& v : s2.basis()) CHECK(s1.contains(v));
  }
}

TEST_CASE("tensor mode ops agree with materialized kron") {
  std::mt19937_64 rng(15);
  FieldSpec q = FieldSpec::rationals();
  for (int rep = 0; rep < 10; ++rep) {
    LinearMap m = random_map(4, 3, q, rng);
    Vec v;
    std::uniform_int_distribution<long> d(-3, 3);
    for (int i = 0; i < 2 * 3 * 2; ++i) v.push_back(Scalar::of_int(q, d(rng)));
    Tensor t(v, {2, 3, 2});
    // applying m on the middle mode equals I2 ⊗ m ⊗ I2 on the flat vector
    LinearMap big = kron(kron(LinearMap::identity(2, q), m),
                         LinearMap::identity(2, q));
    CHECK(t.apply(m, 1).data() == big.apply(v));
    // swapping the two leading modes equals the flip permutation ⊗ I2
    LinearMap fl = kron(LinearMap::flip(2, 3, q), LinearMap::identity(2, q));
    CHECK(t.swap_adjacent(0).data() == fl.apply(v));
  }
}
