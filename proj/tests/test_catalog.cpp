#include <doctest.h>

#include <algorithm>

#include "halg/catalog.hpp"

using namespace halg;

TEST_CASE("group tables") {
  for (std::size_t n = 1; n <= 12; ++n) {
    GroupTable g = GroupTable::cyclic(n);
    CHECK(g.order == n);
    CHECK(g.identity == 0);
  }
  GroupTable s3 = GroupTable::symmetric3();
  CHECK(s3.order == 6);
  CHECK(s3.inverse[s3.element_by_label("(123)")] == s3.element_by_label("(132)"));
  CHECK(s3.inverse[s3.element_by_label("(12)")] == s3.element_by_label("(12)"));
  GroupTable k4 = GroupTable::klein();
  for (std::size_t i = 0; i < 4; ++i) CHECK(k4.inverse[i] == i);
  CHECK(GroupTable::by_name("Z12").order == 12);
  CHECK(GroupTable::by_name("klein").order == 4);
  CHECK(GroupTable::by_name("s3").order == 6);
  CHECK_THROWS_AS(GroupTable::by_name("Z13"), ParseError);
  CHECK_THROWS_AS(GroupTable::by_name("Q8"), ParseError);
  SUBCASE("a non-associative table is rejected") {
    // 2x2 table with a non-group row pattern
    CHECK_THROWS_AS(
        GroupTable::from_table({{0, 1}, {1, 1}}, {"e", "x"}), InvalidGroupTable);
  }
  SUBCASE("a valid custom table is accepted") {
    GroupTable z3 = GroupTable::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {});
    CHECK(z3.order == 3);
    CHECK(z3.inverse[1] == 2);
  }
}

TEST_CASE("group algebras over both fields") {
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (const GroupTable& g :
         {GroupTable::cyclic(2), GroupTable::cyclic(4), GroupTable::klein(),
          GroupTable::symmetric3()}) {
      HopfAlgebra h = group_algebra(g, f);
      CHECK(check_bialgebra(h.bialg).pass());
      CHECK(check_antipode_properties(h).pass());
      // the solved antipode is the inversion permutation
      for (std::size_t j = 0; j < g.order; ++j) {
        Vec col = h.antipode.col(j);
        for (std::size_t i = 0; i < g.order; ++i) {
          CHECK(col[i] == (i == g.inverse[j] ? Scalar::one(f) : Scalar::zero(f)));
        }
      }
    }
  }
}

TEST_CASE("characteristic guard for averaged coactions") {
  GroupTable z2 = GroupTable::cyclic(2);
  GroupTable z4 = GroupTable::cyclic(4);
  CHECK_THROWS_AS(subgroup_partial_coaction_on_k(z2, {0, 1}, FieldSpec::prime(2)),
                  CharacteristicDividesOrder);
  CHECK_THROWS_AS(subgroup_partial_coaction_on_k(z4, {0, 1, 2, 3}, FieldSpec::prime(2)),
                  CharacteristicDividesOrder);
  // odd subsets are constructible over F2
  CoactionMap co = subgroup_partial_coaction_on_k(z4, {0}, FieldSpec::prime(2));
  CHECK(co.map.at(0, 0).is_one());
  // and over F3 the guard triggers on |N| = 3
  CHECK_THROWS_AS(subgroup_partial_coaction_on_k(z4, {0, 1, 2}, FieldSpec::prime(3)),
                  CharacteristicDividesOrder);
}

TEST_CASE("subgroup criterion for coactions on Z4 over the rationals") {
  FieldSpec q = FieldSpec::rationals();
  GroupTable z4 = GroupTable::cyclic(4);
  HopfAlgebra h = group_algebra(z4, q);
  Coalgebra k = ground_coalgebra(q);
  std::vector<std::vector<std::size_t>> passing;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    std::vector<std::size_t> n{0};
    for (std::size_t b = 0; b < 3; ++b) {
      if (mask & (std::size_t{1} << b)) n.push_back(b + 1);
    }
    CoactionMap co = subgroup_partial_coaction_on_k(z4, n, q);
    if (check_partial_comodule_coalgebra(k, h, co, false).pass()) {
      std::sort(n.begin(), n.end());
      passing.push_back(n);
      CHECK(check_nabla_identities(k, h, co).pass());
    }
  }
  std::vector<std::vector<std::size_t>> expected = {{0}, {0, 2}, {0, 1, 2, 3}};
  std::sort(passing.begin(), passing.end());
  std::sort(expected.begin(), expected.end());
  CHECK(passing == expected);
}

TEST_CASE("global catalog outputs also pass the partial checkers") {
  FieldSpec q = FieldSpec::rationals();
  HopfAlgebra h = group_algebra(GroupTable::cyclic(3), q);
  ActionMap reg = regular_module_coalgebra(h);
  REQUIRE(check_module_coalgebra(h.coalgebra(), h, reg).pass());
  CHECK(check_partial_module_coalgebra(h.coalgebra(), h, reg, true).pass());
  CoactionMap tr = trivial_coaction(h.coalgebra(), h);
  REQUIRE(check_comodule_coalgebra(h.coalgebra(), h, tr).pass());
  CHECK(check_partial_comodule_coalgebra(h.coalgebra(), h, tr, true).pass());
}
