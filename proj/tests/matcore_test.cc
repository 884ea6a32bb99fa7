// Copyright 2026 The Reachkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reachkit/matcore.h"

#include <cmath>
#include <limits>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "gtest/gtest.h"
#include "reachkit/errors.h"
#include "test_support.h"

namespace reachkit {
namespace {

using testing::CounterexampleM;
using testing::CounterexampleV;
using testing::RandomGaussian;
using testing::RandomOrthogonal;

void ExpectOrthonormalColumns(const Matrix& q) {
  const Matrix gram = q.transpose() * q;
  EXPECT_LE((gram - Matrix::Identity(q.cols(), q.cols())).norm(), 1e-10);
}

TEST(RangeBasisTest, IdentitySpansEverything) {
  const Matrix q = RangeBasis(Matrix::Identity(3, 3));
  EXPECT_EQ(q.cols(), 3);
  ExpectOrthonormalColumns(q);
}

TEST(RangeBasisTest, FirstTwoCounterexampleColumnsSpanHorizontalPlane) {
  const Matrix q = RangeBasis(CounterexampleM().leftCols(2));
  ASSERT_EQ(q.cols(), 2);
  ExpectOrthonormalColumns(q);
  // Span is {x : x3 = 0}: third row vanishes, e1 and e2 are in range.
  EXPECT_LE(q.row(2).norm(), 1e-14);
  EXPECT_NEAR(DistSqToRange(Vector::Unit(3, 0), CounterexampleM().leftCols(2)), 0.0,
              1e-14);
  EXPECT_NEAR(DistSqToRange(Vector::Unit(3, 1), CounterexampleM().leftCols(2)), 0.0,
              1e-14);
}

TEST(RangeBasisTest, ZeroAndEmptyGiveTrivialSubspace) {
  EXPECT_EQ(RangeBasis(Matrix::Zero(3, 4)).cols(), 0);
  EXPECT_EQ(RangeBasis(Matrix(3, 0)).cols(), 0);
  EXPECT_EQ(RangeBasis(Matrix(3, 0)).rows(), 3);
  EXPECT_EQ(NumericalRank(Matrix::Zero(2, 2)), 0);
}

TEST(RangeBasisTest, RankFollowsRelativeThreshold) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1e-6;
  m(2, 2) = 1e-12;
  EXPECT_EQ(NumericalRank(m), 2);
  EXPECT_EQ(NumericalRank(m * 1e8), 2);
  EXPECT_EQ(NumericalRank(m, Tolerance{1e-3, 1e-9}), 1);
}

TEST(RangeBasisTest, RejectsNonFinite) {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(RangeBasis(m), InputError);
  m(1, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(NumericalRank(m), InputError);
}

TEST(DistSqToRangeTest, CounterexampleValues) {
  const Vector v = CounterexampleV();
  const Matrix m = CounterexampleM();
  EXPECT_NEAR(DistSqToRange(v, m.leftCols(2)), 1.0, 1e-12);
  EXPECT_NEAR(DistSqToRange(v, m), 0.0, 1e-12);
  EXPECT_NEAR(DistSqToRange(v, Matrix(3, 0)), 3.0, 1e-15);
}

TEST(DistSqToRangeTest, DimensionMismatch) {
  EXPECT_THROW(DistSqToRange(Vector::Ones(2), Matrix::Identity(3, 3)),
               InputError);
}

TEST(DistSqToRangeTest, NonIncreasingUnderColumnAugmentation) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = dim(rng);
    const int cols = dim(rng) - 1;
    const Matrix m = RandomGaussian(rows, cols, rng);
    Matrix augmented(rows, cols + 1);
    augmented << m, RandomGaussian(rows, 1, rng);
    const Vector v = RandomGaussian(rows, 1, rng);
    EXPECT_LE(DistSqToRange(v, augmented), DistSqToRange(v, m) + 1e-10);
  }
}

TEST(DistSqToRangeTest, ZeroForCombinationsOfColumns) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = RandomGaussian(5, 3, rng);
    const Vector v = m * RandomGaussian(3, 1, rng);
    EXPECT_NEAR(DistSqToRange(v, m), 0.0, 1e-20 * std::max(1.0, v.squaredNorm()));
  }
}

TEST(DistSqToRangeTest, InvariantUnderOrthogonalTransform) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = RandomGaussian(5, 2, rng);
    const Vector v = RandomGaussian(5, 1, rng);
    const Matrix q = RandomOrthogonal(5, rng);
    const double before = DistSqToRange(v, m);
    const double after = DistSqToRange(q * v, q * m);
    EXPECT_NEAR(after, before, 1e-8 * std::max(1.0, before));
  }
}

TEST(RangeBasisTest, RandomBasesAreOrthonormal) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    // Rank-deficient by construction: 6 columns in a 3-dimensional span.
    const Matrix m = RandomGaussian(6, 3, rng) * RandomGaussian(3, 6, rng);
    const Matrix q = RangeBasis(m);
    EXPECT_EQ(q.cols(), 3);
    ExpectOrthonormalColumns(q);
  }
}

TEST(MatExpTest, ZeroGivesIdentity) {
  EXPECT_EQ(MatExp(Matrix::Zero(4, 4), 2.5), Matrix::Identity(4, 4));
}

TEST(MatExpTest, SquareZeroUsesExactTwoTermSeries) {
  Matrix a = Matrix::Zero(4, 4);
  a(0, 2) = 1.5;
  a(1, 3) = -2.0;
  a(0, 3) = 0.25;
  ASSERT_TRUE(IsSquareZero(a));
  const double t = 0.7;
  const Matrix expected = Matrix::Identity(4, 4) + a * t;
  EXPECT_EQ(MatExp(a, t), expected);
}

TEST(MatExpTest, Diagonal) {
  const Vector d{{-1.0, 0.5, 2.0, 0.0}};
  const Matrix e = MatExp(d.asDiagonal().toDenseMatrix(), 1.3);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(e(i, i), std::exp(d(i) * 1.3), 1e-13 * std::exp(d(i) * 1.3));
  }
  EXPECT_NEAR((e - Matrix(e.diagonal().asDiagonal())).norm(), 0.0, 1e-15);
}

// Independent reference: Eigen's Pade-based matrix exponential.
TEST(MatExpTest, AgreesWithReferenceImplementation) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = RandomGaussian(4, 4, rng);
    const double t = 0.1 + 0.2 * trial / 10.0;
    const Matrix ours = MatExp(a, t);
    const Matrix reference = (a * t).exp();
    EXPECT_LE((ours - reference).norm(), 1e-11 * reference.norm());
  }
}

TEST(MatExpTest, SemigroupProperty) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> time(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = RandomGaussian(3, 3, rng);
    const double s = time(rng);
    const double t = time(rng);
    const Matrix lhs = MatExp(a, s) * MatExp(a, t);
    const Matrix rhs = MatExp(a, s + t);
    EXPECT_LE((lhs - rhs).norm(), 1e-8 * rhs.norm());
  }
}

TEST(MatExpTest, RejectsNonSquare) {
  EXPECT_THROW(MatExp(Matrix::Zero(2, 3), 1.0), InputError);
}

TEST(ToleranceTest, Validate) {
  EXPECT_NO_THROW(Tolerance{}.Validate());
  EXPECT_THROW((Tolerance{0.0, 1e-9}.Validate()), InputError);
  EXPECT_THROW((Tolerance{1e-9, 1.0}.Validate()), InputError);
  EXPECT_THROW((Tolerance{-1e-9, 1e-9}.Validate()), InputError);
}

}  // namespace
}  // namespace reachkit
