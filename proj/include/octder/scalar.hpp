#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "octder/error.hpp"

namespace octder {

enum class FieldKind { Rationals, PrimeField };

/// The coefficient field: either Q or F_p for an odd prime p < 2^32.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws PreconditionError for p = 2, composite p, or p >= 2^32.
  static Field prime(std::uint64_t p);
  /// Builds a field from a kind tag; the modulus is ignored for Rationals.
  static Field make(FieldKind kind, std::uint64_t modulus = 0);

  /// Parses "Q"/"q" or "Fp:<p>" / "mod:<p>".
  static Field parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rationals; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }

  /// "Q" or "Fp:<p>".
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact element of a Field. Rationals are kept gcd-reduced with a positive
/// denominator; prime-field elements are residues in [0, p).
class Scalar {
 public:
  /// Zero of Q.
  Scalar();
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }
  /// num/den in the given field; den must be invertible there.
  static Scalar fraction(const Field& field, long num, long den);
  /// Inverse of to_string(): "num/den", "num", or a decimal residue.
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue for prime-field scalars.
  std::uint64_t residue() const;
  /// Value for rational scalars.
  const mpq_class& rational() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Image of a rational under Q -> F_p. Throws if p divides the denominator.
Scalar reduce_mod(const Scalar& rational, const Field& prime_field);

enum class ArithOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace octder
