#include <gtest/gtest.h>

#include "octder/scalar.hpp"
#include "test_util.hpp"

using namespace octder;
using octder::testing::random_nonzero;
using octder::testing::random_scalar;

namespace {

constexpr int kIterations = 300;

// Remainder by schoolbook long division on the decimal digits.
unsigned long long long_division_remainder(const std::string& digits, unsigned long long m) {
  unsigned long long r = 0;
  for (char c : digits) r = (r * 10 + static_cast<unsigned long long>(c - '0')) % m;
  return r;
}

}  // namespace

TEST(Field, MakeAndParse) {
  EXPECT_TRUE(Field::make(FieldKind::Rationals).is_rational());
  const auto f = Field::make(FieldKind::PrimeField, 101);
  EXPECT_FALSE(f.is_rational());
  EXPECT_EQ(f.modulus(), 101u);
  EXPECT_EQ(f.to_string(), "Fp:101");
  EXPECT_EQ(Field::parse("mod:101"), f);
  EXPECT_EQ(Field::parse("Fp:101"), f);
  EXPECT_EQ(Field::parse("q"), Field::rationals());
  EXPECT_EQ(Field::parse("Q").to_string(), "Q");
}

TEST(Field, CharacteristicTwoRejected) {
  try {
    Field::make(FieldKind::PrimeField, 2);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("characteristic two excluded"), std::string::npos);
  }
  EXPECT_THROW(Field::parse("mod:2"), PreconditionError);
}

TEST(Field, BadModuliRejected) {
  EXPECT_THROW(Field::prime(9), PreconditionError);
  EXPECT_THROW(Field::prime(1), PreconditionError);
  EXPECT_THROW(Field::prime(4294967311ULL), PreconditionError);
  EXPECT_THROW(Field::parse("mod:abc"), PreconditionError);
  EXPECT_THROW(Field::parse("R"), PreconditionError);
  EXPECT_NO_THROW(Field::prime(4294967291ULL));
}

TEST(Scalar, RationalSum) {
  const auto q = Field::rationals();
  const auto s = scalar_arith(Scalar::fraction(q, 1, 2), Scalar::fraction(q, 1, 3), ArithOp::Add);
  EXPECT_EQ(s, Scalar::fraction(q, 5, 6));
  EXPECT_EQ(s.to_string(), "5/6");
}

TEST(Scalar, ProductModP) {
  const auto f = Field::prime(101);
  const auto r = scalar_arith(Scalar(f, 50), Scalar(f, 50), ArithOp::Mul);
  EXPECT_EQ(r.residue(), long_division_remainder("2500", 101));
  EXPECT_EQ(r.residue(), 76u);
}

TEST(Scalar, InverseIsInverse) {
  for (const auto& f : {Field::rationals(), Field::prime(101), Field::prime(4294967291ULL)}) {
    for (int t = 0; t < kIterations; ++t) {
      const auto x = random_nonzero(f);
      EXPECT_TRUE((x * x.inverse()).is_one()) << x;
      EXPECT_EQ(scalar_arith(x, x, ArithOp::Div), Scalar::one(f));
    }
  }
}

TEST(Scalar, DivisionByZero) {
  const auto q = Field::rationals();
  EXPECT_THROW(Scalar::zero(q).inverse(), PreconditionError);
  EXPECT_THROW(Scalar::one(Field::prime(7)) / Scalar::zero(Field::prime(7)), PreconditionError);
  EXPECT_THROW(Scalar::fraction(q, 1, 0), PreconditionError);
}

TEST(Scalar, FieldMismatch) {
  EXPECT_THROW(Scalar::one(Field::rationals()) + Scalar::one(Field::prime(5)), PreconditionError);
  EXPECT_THROW(Scalar::one(Field::prime(3)) * Scalar::one(Field::prime(5)), PreconditionError);
}

TEST(Scalar, Normalization) {
  const auto q = Field::rationals();
  const auto a = Scalar::fraction(q, 6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(a.rational().get_den(), 2);
  EXPECT_EQ(Scalar::parse(q, a.to_string()), a);
  EXPECT_EQ(Scalar(Field::prime(101), -1).residue(), 100u);
  EXPECT_EQ(Scalar(Field::prime(101), 205).residue(), 3u);
}

TEST(Scalar, ParseRoundTrip) {
  for (const auto& f : {Field::rationals(), Field::prime(101)}) {
    for (int t = 0; t < kIterations; ++t) {
      const auto x = random_scalar(f);
      const auto y = Scalar::parse(f, x.to_string());
      EXPECT_EQ(x, y);
      EXPECT_EQ(y.to_string(), x.to_string());
    }
  }
}

TEST(ScalarProperty, FieldAxioms) {
  for (const auto& f : {Field::rationals(), Field::prime(101), Field::prime(65537)}) {
    for (int t = 0; t < kIterations; ++t) {
      const auto a = random_scalar(f), b = random_scalar(f), c = random_scalar(f);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, Scalar::zero(f));
      EXPECT_EQ(-(-a), a);
    }
  }
}

TEST(ScalarProperty, ReductionIsHomomorphism) {
  const auto q = Field::rationals();
  const auto p = Field::prime(101);
  for (int t = 0; t < kIterations; ++t) {
    // denominators 1..12 are coprime to 101
    const auto a = random_scalar(q), b = random_scalar(q), c = random_scalar(q);
    EXPECT_EQ(reduce_mod(a * b + c, p), reduce_mod(a, p) * reduce_mod(b, p) + reduce_mod(c, p));
    EXPECT_EQ(reduce_mod(a - b, p), reduce_mod(a, p) - reduce_mod(b, p));
    if (!b.is_zero() && !reduce_mod(b, p).is_zero()) {
      EXPECT_EQ(reduce_mod(a / b, p), reduce_mod(a, p) / reduce_mod(b, p));
    }
  }
  EXPECT_THROW(reduce_mod(Scalar::fraction(q, 1, 101), p), PreconditionError);
}
