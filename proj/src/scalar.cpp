#include "halg/scalar.hpp"

#include <cctype>

namespace halg {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw ParseError("field modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= (std::uint64_t{1} << 31)) {
    throw ParseError("field modulus too large (must fit below 2^31)");
  }
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
  return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p), a in [1, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Rationals) {
    s.q_ = 1;
  } else {
    s.r_ = 1 % f.p;
  }
  return s;
}

Scalar Scalar::of_int(const FieldSpec& f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Rationals) {
    s.q_ = v;
  } else {
    std::int64_t m = v % static_cast<std::int64_t>(f.p);
    if (m < 0) m += static_cast<std::int64_t>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::of_fraction(const FieldSpec& f, long num, long den) {
  if (den == 0) throw DivisionByZero("fraction with zero denominator");
  return of_int(f, num) / of_int(f, den);
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.field_ = FieldSpec::rationals();
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
  Scalar s;
  s.field_ = FieldSpec::prime(p);
  s.r_ = r % p;
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& s) {
  if (f.kind == FieldKind::PrimeField) {
    if (!looks_like_integer(s)) {
      throw ParseError("invalid prime-field element '" + s + "'");
    }
    mpz_class z(s);
    mpz_class m = z % static_cast<unsigned long>(f.p);
    if (m < 0) m += static_cast<unsigned long>(f.p);
    Scalar out;
    out.field_ = f;
    out.r_ = m.get_ui();
    return out;
  }
  auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!looks_like_integer(num) || !looks_like_integer(den) || den[0] == '-') {
    throw ParseError("invalid rational '" + s + "'");
  }
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return rational(q);
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1 % field_.p;
}

std::string Scalar::str() const {
  if (field_.kind == FieldKind::Rationals) return q_.get_str();
  return std::to_string(r_);
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) {
    throw FieldMismatch("operands from different fields: " + a.field_.str() +
                        " vs " + b.field_.str());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.kind == FieldKind::Rationals) {
    out.q_ = -q_;
  } else {
    out.r_ = (r_ == 0) ? 0 : field_.p - r_;
  }
  return out;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar out = *this;
  if (field_.kind == FieldKind::Rationals) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = mod_inverse(r_, field_.p);
  }
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar out = a;
  if (a.field_.kind == FieldKind::Rationals) {
    out.q_ = a.q_ + b.q_;
  } else {
    out.r_ = (a.r_ + b.r_) % a.field_.p;
  }
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar out = a;
  if (a.field_.kind == FieldKind::Rationals) {
    out.q_ = a.q_ - b.q_;
  } else {
    out.r_ = (a.r_ + a.field_.p - b.r_) % a.field_.p;
  }
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar out = a;
  if (a.field_.kind == FieldKind::Rationals) {
    out.q_ = a.q_ * b.q_;
  } else {
    out.r_ = (a.r_ * b.r_) % a.field_.p;
  }
  return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar& Scalar::operator+=(const Scalar& b) {
  *this = *this + b;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  *this = *this * b;
  return *this;
}

bool Scalar::operator==(const Scalar& b) const {
  require_same(*this, b);
  return field_.kind == FieldKind::Rationals ? q_ == b.q_ : r_ == b.r_;
}

}  // namespace halg
