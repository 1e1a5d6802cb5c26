#include <doctest.h>

#include <random>

#include "halg/scalar.hpp"

using namespace halg;

namespace {

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.kind == FieldKind::Rationals) {
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 99);
    return Scalar::of_fraction(f, num(rng), den(rng));
  }
  std::uniform_int_distribution<std::uint64_t> r(0, f.p - 1);
  return Scalar::residue(r(rng), f.p);
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(Scalar::of_fraction(q, 1, 2) + Scalar::of_fraction(q, 1, 3) ==
        Scalar::of_fraction(q, 5, 6));
  CHECK(Scalar::of_fraction(q, 1, 3).str() == "1/3");
  CHECK(Scalar::of_int(q, -7).str() == "-7");
  CHECK((Scalar::of_fraction(q, 2, 4)).str() == "1/2");
}

TEST_CASE("prime field inverse matches brute force") {
  // independent oracle: search x with 3x = 1 mod 7
  std::uint64_t expected = 0;
  for (std::uint64_t x = 1; x < 7; ++x) {
    if ((3 * x) % 7 == 1) expected = x;
  }
  CHECK(expected == 5);
  CHECK(Scalar::residue(3, 7).inv() == Scalar::residue(expected, 7));
}

TEST_CASE("characteristic") {
  CHECK(FieldSpec::rationals().characteristic() == 0);
  CHECK(FieldSpec::prime(2).characteristic() == 2);
  CHECK(FieldSpec::prime(7).characteristic() == 7);
  CHECK_THROWS_AS(FieldSpec::prime(4), ParseError);
  CHECK_THROWS_AS(FieldSpec::prime(1), ParseError);
}

TEST_CASE("field axioms hold exactly on sampled triples") {
  std::mt19937_64 rng(2024101);
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (int i = 0; i < 5000; ++i) {
      Scalar a = random_scalar(f, rng);
      Scalar b = random_scalar(f, rng);
      Scalar c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a.inv() * a == Scalar::one(f));
    }
  }
}

TEST_CASE("rationals stay canonical after every operation") {
  std::mt19937_64 rng(7);
  FieldSpec q = FieldSpec::rationals();
  for (int i = 0; i < 2000; ++i) {
    Scalar a = random_scalar(q, rng);
    Scalar b = random_scalar(q, rng);
    for (const Scalar& v : {a + b, a - b, a * b, -a}) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), v.rat().get_num().get_mpz_t(),
              v.rat().get_den().get_mpz_t());
      CAPTURE(v.str());
      CHECK(v.rat().get_den() > 0);
      CHECK((v.rat().get_num() == 0 ? g == v.rat().get_den() : g == 1));
    }
  }
}

TEST_CASE("errors") {
  FieldSpec q = FieldSpec::rationals();
  CHECK_THROWS_AS(Scalar::zero(q).inv(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), DivisionByZero);
  CHECK_THROWS_AS(Scalar::one(q) + Scalar::residue(1, 5), FieldMismatch);
  CHECK_THROWS_AS(Scalar::residue(1, 5) + Scalar::residue(1, 7), FieldMismatch);
}

TEST_CASE("string round trips") {
  FieldSpec q = FieldSpec::rationals();
  for (const char* s : {"0", "1", "-1", "5/6", "-22/7", "100"}) {
    CHECK(Scalar::parse(q, s).str() == s);
  }
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(Scalar::parse(f5, "7") == Scalar::residue(2, 5));
  CHECK(Scalar::parse(f5, "-1") == Scalar::residue(4, 5));
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(q, "a"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(q, "1/-2"), ParseError);
}
