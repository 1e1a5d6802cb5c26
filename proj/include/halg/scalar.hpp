#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "halg/errors.hpp"

namespace halg {

enum class FieldKind { Rationals, PrimeField };

/// Ground field descriptor: the rationals or a prime field F_p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;  // modulus, PrimeField only

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p);  // throws ParseError unless p prime

  std::uint64_t characteristic() const {
    return kind == FieldKind::Rationals ? 0 : p;
  }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field elements are canonical residues in [0, p).
/// Values are immutable in spirit: every operation returns a fresh Scalar.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}  // zero of Q (container use)

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long v);
  static Scalar of_fraction(const FieldSpec& f, long num, long den);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint64_t r, std::uint64_t p);
  static Scalar parse(const FieldSpec& f, const std::string& s);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar inv() const;  // throws DivisionByZero on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  const mpq_class& rat() const { return q_; }
  std::uint64_t res() const { return r_; }

 private:
  FieldSpec field_;
  mpq_class q_;           // Rationals only
  std::uint64_t r_ = 0;   // PrimeField only

  static void require_same(const Scalar& a, const Scalar& b);
};

}  // namespace halg
