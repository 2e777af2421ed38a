#include <sstream>

#include <gtest/gtest.h>

#include "octder/linalg.hpp"
#include "test_util.hpp"

using namespace octder;
using octder::testing::random_long;

namespace {

std::vector<Scalar> vec(const Field& f, std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

SparseMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, int density) {
  SparseMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (random_long(0, 99) < density) m.add(r, c, Scalar(f, random_long(-5, 5)));
    }
  }
  return m;
}

std::vector<Scalar> times(const SparseMatrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.rows(), Scalar::zero(m.field()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) out[r] += e.value * v[e.col];
  }
  return out;
}

const Field kFields[] = {Field::rationals(), Field::prime(101)};

}  // namespace

TEST(Linalg, RrefExamples) {
  for (const auto& f : kFields) {
    EXPECT_EQ(rref(SparseMatrix::from_dense(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).rank, 3u);
    const auto r = rref(SparseMatrix::from_dense(f, {{1, 2}, {2, 4}}));
    EXPECT_EQ(r.rank, 1u);
    ASSERT_EQ(r.row_space.dim(), 1u);
    EXPECT_EQ(r.row_space.vectors()[0], vec(f, {1, 2}));
    EXPECT_EQ(rref(SparseMatrix(f, 3, 4)).rank, 0u);
  }
}

TEST(Linalg, NullSpaceExamples) {
  for (const auto& f : kFields) {
    EXPECT_EQ(null_space(SparseMatrix::from_dense(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).dim(), 0u);
    EXPECT_EQ(null_space(SparseMatrix(f, 4, 4)).dim(), 4u);
    const auto ns = null_space(SparseMatrix::from_dense(f, {{1, 2}, {2, 4}}));
    ASSERT_EQ(ns.dim(), 1u);
    // RREF scaling puts the pivot on the first column: (1, -1/2) spans (-2, 1).
    EXPECT_TRUE(span_equal(ns, EchelonBasis::from_vectors(f, 2, {vec(f, {-2, 1})})));
  }
}

TEST(Linalg, SpanEquality) {
  const auto f = Field::rationals();
  const auto a = EchelonBasis::from_vectors(f, 2, {vec(f, {1, 0})});
  EXPECT_TRUE(span_equal(a, a));
  EXPECT_TRUE(span_equal(a, EchelonBasis::from_vectors(f, 2, {vec(f, {2, 0})})));
  EXPECT_FALSE(span_equal(a, EchelonBasis::from_vectors(f, 2, {vec(f, {0, 1})})));
  EXPECT_THROW(span_equal(a, EchelonBasis(f, 3)), PreconditionError);
  EXPECT_THROW(span_equal(a, EchelonBasis(Field::prime(5), 2)), PreconditionError);
}

TEST(Linalg, Membership) {
  const auto f = Field::prime(101);
  const auto b = EchelonBasis::from_vectors(f, 3, {vec(f, {1, 2, 0}), vec(f, {2, 4, 1})});
  EXPECT_TRUE(in_span(vec(f, {0, 0, 0}), b));
  EXPECT_FALSE(in_span(vec(f, {0, 1, 0}), b));
  for (const auto& v : b.vectors()) EXPECT_TRUE(in_span(v, b));
  EXPECT_EQ(b.pivots(), (std::vector<std::size_t>{0, 2}));
}

TEST(LinalgProperty, RankNullityAndResidual) {
  for (const auto& f : kFields) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t rows = random_long(1, 12), cols = random_long(1, 12);
      const auto m = random_matrix(f, rows, cols, 35);
      const auto r = rref(m);
      for (const auto rule : {PivotRule::Leftmost, PivotRule::FewestOccurrences}) {
        NullSpaceStats stats;
        const auto ns = null_space(m.as_source(), cols, f, rule, &stats);
        EXPECT_EQ(r.rank + ns.dim(), cols);
        EXPECT_EQ(stats.rank, r.rank);
        EXPECT_EQ(stats.rows_seen, rows);
        for (const auto& v : ns.vectors()) {
          for (const auto& x : times(m, v)) EXPECT_TRUE(x.is_zero());
        }
        EXPECT_EQ(ns, null_space(m));
      }
    }
  }
}

TEST(LinalgProperty, RrefIdempotent) {
  for (const auto& f : kFields) {
    for (int t = 0; t < 40; ++t) {
      const auto m = random_matrix(f, random_long(1, 10), random_long(1, 10), 40);
      const auto once = rref(m).row_space;
      SparseMatrix again(f, once.dim(), once.ambient());
      for (std::size_t r = 0; r < once.dim(); ++r) {
        for (std::size_t c = 0; c < once.ambient(); ++c) again.add(r, c, once.vectors()[r][c]);
      }
      EXPECT_EQ(rref(again).row_space, once);
    }
  }
}

TEST(LinalgProperty, RationalAndModularRanksAgree) {
  const auto q = Field::rationals();
  const auto p = Field::prime(101);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = random_long(1, 10), cols = random_long(1, 10);
    std::vector<std::vector<long>> dense(rows, std::vector<long>(cols, 0));
    for (auto& row : dense) {
      for (auto& x : row) x = random_long(0, 2) == 0 ? random_long(-3, 3) : 0;
    }
    const auto rq = rref(SparseMatrix::from_dense(q, dense)).rank;
    const auto rp = rref(SparseMatrix::from_dense(p, dense)).rank;
    EXPECT_LE(rp, rq);
  }
}

TEST(Linalg, TextRoundTrip) {
  for (const auto& f : kFields) {
    SparseMatrix m(f, 3, 4);
    m.add(0, 1, Scalar(f, 3));
    m.add(2, 3, Scalar(f, -7));
    m.add(2, 0, Scalar::one(f) / Scalar(f, 2));
    const auto text = m.to_text();
    std::istringstream in(text);
    const auto back = SparseMatrix::from_text(in);
    EXPECT_EQ(back.to_text(), text);
    EXPECT_EQ(back.nonzeros(), 3u);
  }
  std::istringstream bad("2 2 Q\n5 0 1\n");
  EXPECT_THROW(SparseMatrix::from_text(bad), PreconditionError);
}

TEST(Linalg, CanonicalRow) {
  const auto f = Field::prime(7);
  const auto row = canonical_row({{3, Scalar(f, 2)}, {1, Scalar(f, 1)}, {3, Scalar(f, 5)}, {0, Scalar(f, 0)}});
  ASSERT_EQ(row.size(), 1u);
  EXPECT_EQ(row[0].col, 1u);
}

TEST(Linalg, EchelonJson) {
  const auto f = Field::rationals();
  const auto b = EchelonBasis::from_vectors(f, 2, {vec(f, {2, 1})});
  EXPECT_EQ(b.to_json().dump(), R"([["1","1/2"]])");
}
