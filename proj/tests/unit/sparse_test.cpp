// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "svqe/dense.hpp"
#include "svqe/error.hpp"
#include "svqe/sparse.hpp"
#include "test_support.hpp"

namespace svqe {
namespace {

using testing::Dense;

OneSparseHermitian pauli_x_one_sparse() {
  return OneSparseHermitian::from_pairs(1, {{0, 1, Complex{1.0, 0.0}}});
}

TEST(ReconstructDense, PauliXFromPairs) {
  Dense expected(2, 2);
  expected << 0, 1, 1, 0;
  EXPECT_EQ(reconstruct_dense(pauli_x_one_sparse()), expected);
}

TEST(ReconstructDense, PauliZTerm) {
  const auto z = SelfInverseTerm::from_tables(1, {0, 1}, {1, -1}, PhaseClass::kReal);
  Dense expected(2, 2);
  expected << 1, 0, 0, -1;
  EXPECT_EQ(reconstruct_dense(z), expected);
}

TEST(ReconstructDense, RandomCooMatchesEntries) {
  std::mt19937_64 rng(11);
  const auto entries = testing::random_d_sparse(3, 3, 1.0, rng);
  const auto h = SparseOracleMatrix::from_upper_entries(3, entries);
  EXPECT_EQ(reconstruct_dense(h), testing::dense_from_entries(3, entries));
}

TEST(ReconstructDense, GuardsDimension) {
  const auto big = SelfInverseTerm(
      13, [](BasisIndex x, QueryCounter*) { return x; },
      [](BasisIndex, BasisIndex, QueryCounter*) { return 1; }, PhaseClass::kReal);
  try {
    reconstruct_dense(big);
    FAIL() << "expected DIMENSION_TOO_LARGE";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionTooLarge);
  }
}

TEST(Validate, PauliXPasses) {
  const auto report = validate(pauli_x_one_sparse());
  EXPECT_TRUE(report.ok());
  for (const char* name : {"involution", "hermiticity", "one_sparse", "max_norm", "finite"}) {
    ASSERT_NE(report.find(name), nullptr) << name;
  }
}

TEST(Validate, NonInvolutionReportsFirstRow) {
  const OneSparseHermitian h(
      1, 1.0, [](BasisIndex, QueryCounter*) -> BasisIndex { return 1; },
      [](BasisIndex, BasisIndex, QueryCounter*) { return Complex{1.0, 0.0}; });
  const auto report = validate(h);
  const auto* inv = report.find("involution");
  ASSERT_NE(inv, nullptr);
  EXPECT_FALSE(inv->passed);
  ASSERT_TRUE(inv->counterexample.has_value());
  EXPECT_EQ(*inv->counterexample, 0U);
}

TEST(Validate, ImaginaryTermWithSymmetricSignIsNotHermitian) {
  const auto bad =
      SelfInverseTerm::from_tables(1, {1, 0}, {1, 1}, PhaseClass::kImaginary);
  const auto report = validate(bad);
  EXPECT_FALSE(report.find("hermiticity")->passed);
  const Dense d = reconstruct_dense(bad);
  EXPECT_NE(d, Dense(d.adjoint()));
}

TEST(Validate, SparseOracleCatchesUnderstatedSparsity) {
  const auto entries = testing::Entries{{0, 1, {1, 0}}, {0, 2, {1, 0}}};
  const auto good = SparseOracleMatrix::from_upper_entries(2, entries);
  const SparseOracleMatrix lying(
      2, 1, 1.0, [&](BasisIndex x, std::size_t i) { return good.neighbor(x, i); },
      [&](BasisIndex x, BasisIndex y) { return good.entry(x, y); });
  EXPECT_TRUE(validate(good).ok());
  EXPECT_FALSE(validate(lying).find("sparsity")->passed);
}

TEST(SparseOracleMatrix, NeighborsAscendAndTerminate) {
  const auto h = SparseOracleMatrix::from_upper_entries(
      2, {{0, 3, {1, 0}}, {0, 1, {0, 1}}, {0, 0, {2, 0}}});
  EXPECT_EQ(h.sparsity(), 3U);
  EXPECT_EQ(h.neighbor(0, 0), 0U);
  EXPECT_EQ(h.neighbor(0, 1), 1U);
  EXPECT_EQ(h.neighbor(0, 2), 3U);
  EXPECT_FALSE(h.neighbor(0, 3).has_value());
  EXPECT_EQ(h.entry(1, 0), Complex(0, -1));
  EXPECT_DOUBLE_EQ(h.max_norm(), 2.0);
}

TEST(SparseOracleMatrix, CountsQueries) {
  const auto h = SparseOracleMatrix::from_upper_entries(1, {{0, 1, {1, 0}}});
  QueryCounter c;
  h.neighbor(0, 0, &c);
  h.entry(0, 1, &c);
  h.entry(1, 0, &c);
  EXPECT_EQ(c.source_of, 1U);
  EXPECT_EQ(c.source_oh, 2U);
}

TEST(SparseOracleMatrix, RejectsBadTables) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kBadInput;  // unreachable in these cases
  };
  EXPECT_EQ(code_of([] { SparseOracleMatrix::from_upper_entries(1, {{0, 0, {1, 1}}}); }),
            ErrorCode::kNonHermitian);
  EXPECT_THROW(SparseOracleMatrix::from_upper_entries(1, {{1, 0, {1, 0}}}), Error);
  EXPECT_THROW(SparseOracleMatrix::from_upper_entries(1, {{0, 1, {1, 0}}, {0, 1, {2, 0}}}),
               Error);
  EXPECT_THROW(SparseOracleMatrix::from_upper_entries(
                   1, {{0, 1, {std::numeric_limits<double>::quiet_NaN(), 0}}}),
               Error);
  EXPECT_THROW(SparseOracleMatrix::from_upper_entries(1, {{0, 1, {3, 0}}}, 1.0), Error);
}

TEST(OneSparseHermitian, FromPairsRejectsSharedRow) {
  try {
    OneSparseHermitian::from_pairs(2, {{0, 1, {1, 0}}, {1, 2, {1, 0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOneSparse);
  }
}

TEST(SelfInverseTerm, ValuesByClass) {
  const auto re = SelfInverseTerm::from_tables(1, {1, 0}, {-1, -1}, PhaseClass::kReal);
  EXPECT_EQ(re.value(0), Complex(-1, 0));
  const auto im = SelfInverseTerm::from_tables(2, {1, 0, 2, 3}, {1, -1, -1, 1},
                                               PhaseClass::kImaginary);
  EXPECT_EQ(im.value(0), Complex(0, 1));
  EXPECT_EQ(im.value(1), Complex(0, -1));
  EXPECT_EQ(im.value(2), Complex(-1, 0));  // diagonal stays real
  EXPECT_TRUE(validate(im).ok());
}

TEST(QueryCounter, Accumulates) {
  QueryCounter a{1, 2, 3, 4, 5, 6};
  a += QueryCounter{1, 1, 1, 1, 1, 1};
  EXPECT_EQ(a, (QueryCounter{2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(a.one_sparse_total(), 14U);
  EXPECT_EQ(a.source_total(), 13U);
}

}  // namespace
}  // namespace svqe
