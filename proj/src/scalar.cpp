#include "octder/scalar.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace octder {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 64-bit; p < 2^32 so nothing overflows
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw PreconditionError("division by zero");
  if (t0 < 0) t0 += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t0);
}

std::uint64_t reduce_signed(long value, std::uint64_t p) {
  const long m = static_cast<long>(p);
  long r = value % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw PreconditionError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw PreconditionError("characteristic two excluded");
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw PreconditionError("prime modulus must be below 2^32");
  }
  if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.kind_ = FieldKind::PrimeField;
  f.modulus_ = p;
  return f;
}

Field Field::make(FieldKind kind, std::uint64_t modulus) {
  return kind == FieldKind::Rationals ? rationals() : prime(modulus);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  for (std::string_view prefix : {"Fp:", "mod:"}) {
    if (text.substr(0, prefix.size()) == prefix) {
      return prime(parse_u64(text.substr(prefix.size()), "modulus"));
    }
  }
  throw PreconditionError("unknown field '" + std::string(text) + "' (expected q or mod:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar() : value_(mpq_class(0)) {}

Scalar::Scalar(const Field& field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce_signed(value, field.modulus());
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
  mpq_class q = value;
  q.canonicalize();
  if (field.is_rational()) {
    value_ = std::move(q);
  } else {
    const std::uint64_t p = field.modulus();
    const std::uint64_t den = reduce_mpz(q.get_den(), p);
    if (den == 0) throw PreconditionError("denominator divisible by the characteristic");
    value_ = reduce_mpz(q.get_num(), p) * mod_inverse(den, p) % p;
  }
}

Scalar Scalar::fraction(const Field& field, long num, long den) {
  if (den == 0) throw PreconditionError("division by zero");
  return Scalar(field, mpq_class(num, den));
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  if (text.empty()) throw PreconditionError("empty scalar");
  if (field.is_rational()) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) {
      throw PreconditionError("malformed rational '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw PreconditionError("division by zero");
    return Scalar(field, q);
  }
  const std::uint64_t r = parse_u64(text, "residue");
  if (r >= field.modulus()) throw PreconditionError("residue out of range: " + std::string(text));
  Scalar s(field, 0L);
  s.value_ = r;
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw PreconditionError("residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw PreconditionError("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw PreconditionError("field mismatch: " + field_.to_string() + " vs " +
                            other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = mod_inverse(v, field_.modulus());
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    if (v != 0) v = field_.modulus() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + std::get<std::uint64_t>(other.value_)) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + field_.modulus() - std::get<std::uint64_t>(other.value_)) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = v * std::get<std::uint64_t>(other.value_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar reduce_mod(const Scalar& rational, const Field& prime_field) {
  if (prime_field.is_rational()) throw PreconditionError("reduce_mod target must be a prime field");
  return Scalar(prime_field, rational.rational());
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw InternalError("unknown arithmetic op");
}

}  // namespace octder
