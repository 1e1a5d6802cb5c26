#include <doctest.h>

#include "halg/catalog.hpp"
#include "halg/hopf.hpp"

using namespace halg;

namespace {

Algebra ground_algebra(const FieldSpec& f) {
  Algebra a;
  a.space = VectorSpace{1, f, {"1"}};
  a.mul = LinearMap(1, 1, f);
  a.mul.set(0, 0, Scalar::one(f));
  a.unit = a.mul;
  return a;
}

// two-element idempotent monoid {1, x}, x·x = x, with group-like x: a valid
// bialgebra whose identity map has no convolution inverse
Bialgebra idempotent_monoid_bialgebra(const FieldSpec& f) {
  VectorSpace space{2, f, {"1", "x"}};
  Algebra alg{space, LinearMap(2, 4, f), LinearMap(2, 1, f)};
  alg.mul.set(0, 0, Scalar::one(f));   // 1·1 = 1
  alg.mul.set(1, 1, Scalar::one(f));   // 1·x = x
  alg.mul.set(1, 2, Scalar::one(f));   // x·1 = x
  alg.mul.set(1, 3, Scalar::one(f));   // x·x = x
  alg.unit.set(0, 0, Scalar::one(f));
  Coalgebra co{space, LinearMap(4, 2, f), LinearMap(1, 2, f)};
  co.delta.set(0, 0, Scalar::one(f));
  co.delta.set(3, 1, Scalar::one(f));
  co.epsilon.set(0, 0, Scalar::one(f));
  co.epsilon.set(0, 1, Scalar::one(f));
  return Bialgebra{alg, co};
}

LinearMap inverse_permutation_matrix(const GroupTable& g, const FieldSpec& f) {
  LinearMap s(g.order, g.order, f);
  for (std::size_t j = 0; j < g.order; ++j) {
    s.set(g.inverse[j], j, Scalar::one(f));
  }
  return s;
}

}  // namespace

TEST_CASE("group algebras are bialgebras") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(check_bialgebra(group_algebra(GroupTable::cyclic(3), q).bialg).pass());
  CHECK(check_bialgebra(group_algebra(GroupTable::cyclic(1), q).bialg).pass());
  CHECK(check_bialgebra(idempotent_monoid_bialgebra(q)).pass());
}

TEST_CASE("a forced eps(g)=0 breaks the counit compatibility") {
  FieldSpec q = FieldSpec::rationals();
  HopfAlgebra h = group_algebra(GroupTable::cyclic(2), q);
  Bialgebra b = h.bialg;
  b.coalg.epsilon.set(0, 1, Scalar::zero(q));
  CheckReport rep = check_bialgebra(b);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.find("epsilon-mult")->pass);
  CHECK_FALSE(rep.find("coalg:counit-left")->pass);  // eps is also no counit now
}

TEST_CASE("convolution") {
  FieldSpec q = FieldSpec::rationals();
  HopfAlgebra h = group_algebra(GroupTable::cyclic(2), q);
  const Coalgebra& c = h.coalgebra();
  SUBCASE("unit of the convolution algebra") {
    LinearMap ue = compose(h.unit(), h.epsilon());
    LinearMap f(2, 2, q);
    f.set(0, 1, Scalar::of_int(q, 3));
    f.set(1, 0, Scalar::of_fraction(q, 1, 2));
    CHECK(convolution(ue, f, c, h.algebra()) == f);
    CHECK(convolution(f, ue, c, h.algebra()) == f);
  }
  SUBCASE("id ∗ S = unit∘counit on kZ2") {
    LinearMap conv =
        convolution(LinearMap::identity(2, q), h.antipode, c, h.algebra());
    CHECK(conv == compose(h.unit(), h.epsilon()));
  }
  SUBCASE("basis functionals convolve pointwise on group-likes") {
    Algebra k = ground_algebra(q);
    Algebra dual = dual_algebra(c);
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        LinearMap fa(1, 2, q), fb(1, 2, q);
        fa.set(0, a, Scalar::one(q));
        fb.set(0, b, Scalar::one(q));
        LinearMap conv = convolution(fa, fb, c, k);
        // must match the dual-algebra product of the two functionals
        Vec prod = dual.mul.col(a * 2 + b);
        for (std::size_t j = 0; j < 2; ++j) CHECK(conv.at(0, j) == prod[j]);
      }
    }
  }
}

TEST_CASE("antipode computation") {
  FieldSpec q = FieldSpec::rationals();
  SUBCASE("kZ2 has the identity antipode") {
    auto h = compute_antipode(group_algebra(GroupTable::cyclic(2), q).bialg);
    REQUIRE(h.has_value());
    CHECK(h->antipode == LinearMap::identity(2, q));
  }
  SUBCASE("kZ3 antipode is the inversion permutation") {
    GroupTable g = GroupTable::cyclic(3);
    auto h = compute_antipode(group_algebra(g, q).bialg);
    REQUIRE(h.has_value());
    CHECK(h->antipode == inverse_permutation_matrix(g, q));
  }
  SUBCASE("idempotent monoid bialgebra has no antipode") {
    CHECK_FALSE(compute_antipode(idempotent_monoid_bialgebra(q)).has_value());
  }
  SUBCASE("non-bialgebras are rejected") {
    HopfAlgebra h = group_algebra(GroupTable::cyclic(2), q);
    Bialgebra b = h.bialg;
    b.coalg.epsilon.set(0, 1, Scalar::zero(q));
    CHECK_THROWS_AS(compute_antipode(b), NotABialgebra);
  }
}

TEST_CASE("antipode properties") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(check_antipode_properties(group_algebra(GroupTable::symmetric3(), q)).pass());
  CHECK(check_antipode_properties(group_algebra(GroupTable::cyclic(4), q)).pass());
  SUBCASE("a wrong antipode on kZ2 fails") {
    HopfAlgebra h = group_algebra(GroupTable::cyclic(2), q);
    h.antipode = LinearMap(2, 2, q);
    h.antipode.set(0, 1, Scalar::one(q));
    h.antipode.set(1, 0, Scalar::one(q));
    CheckReport rep = check_antipode_properties(h);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.find("S-conv-left")->pass);
  }
}

TEST_CASE("dual Hopf algebra") {
  FieldSpec q = FieldSpec::rationals();
  for (const GroupTable& g : {GroupTable::cyclic(2), GroupTable::cyclic(3),
                              GroupTable::symmetric3()}) {
    HopfAlgebra h = group_algebra(g, q);
    HopfAlgebra hs = dual_hopf(h);
    CHECK(check_bialgebra(hs.bialg).pass());
    CHECK(check_antipode_properties(hs).pass());
    // counit of the dual evaluates functionals at the group identity
    for (std::size_t j = 0; j < g.order; ++j) {
      CHECK(hs.epsilon().at(0, j) == h.unit().at(j, 0));
    }
    HopfAlgebra hss = dual_hopf(hs);
    CHECK(hss.mul() == h.mul());
    CHECK(hss.unit() == h.unit());
    CHECK(hss.delta() == h.delta());
    CHECK(hss.epsilon() == h.epsilon());
    CHECK(hss.antipode == h.antipode);
  }
}

TEST_CASE("separation of points always holds at finite dimension") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(separates_points(group_algebra(GroupTable::cyclic(2), q)));
  CHECK(separates_points(group_algebra(GroupTable::symmetric3(), q)));
  CHECK(separates_points(
      group_algebra(GroupTable::klein(), FieldSpec::prime(5))));
}
