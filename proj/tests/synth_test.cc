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

#include "reachkit/synth.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "gtest/gtest.h"
#include "reachkit/errors.h"
#include "reachkit/hardness.h"
#include "test_support.h"

namespace reachkit {
namespace {

using testing::RandomGaussian;
using testing::StarSystem;

LinearSystem ScalarIntegrator() {
  LinearSystem sys;
  sys.a = Matrix::Zero(1, 1);
  sys.b = Matrix::Ones(1, 1);
  sys.x0 = Vector::Zero(1);
  sys.x1 = Vector::Ones(1);
  return sys;
}

// Lightly damped oscillator; smooth but not polynomial in t.
LinearSystem Oscillator() {
  LinearSystem sys;
  sys.a = Matrix{{0.0, 1.0}, {-1.0, -0.5}};
  sys.b = Matrix::Identity(2, 2);
  sys.x0 = Vector{{1.0, 0.0}};
  sys.x1 = Vector{{0.0, 1.0}};
  sys.t1 = 2.0;
  return sys;
}

TEST(QuadratureWeightsTest, IntegratesCubicsExactly) {
  for (int intervals : {2, 3, 4, 7, 10}) {
    const double h = 2.0 / intervals;
    const std::vector<double> w = QuadratureWeights(intervals, h);
    ASSERT_EQ(w.size(), static_cast<size_t>(intervals + 1));
    double integral = 0.0;
    for (int k = 0; k <= intervals; ++k) {
      const double t = k * h;
      integral += w[k] * (t * t * t - t + 1.0);
    }
    // ∫_0^2 t^3 - t + 1 dt = 4 - 2 + 2.
    EXPECT_NEAR(integral, 4.0, 1e-12) << intervals;
  }
  EXPECT_THROW(QuadratureWeights(1, 1.0), InputError);
}

TEST(ReachGramianTest, ScalarIntegrator) {
  const Matrix w = ReachGramian(ScalarIntegrator(), ActuatedSet{1}, 10);
  EXPECT_NEAR(w(0, 0), 1.0, 1e-14);
}

TEST(ReachGramianTest, EmptySetIsZero) {
  EXPECT_TRUE(ReachGramian(StarSystem(4), ActuatedSet(), 10).isZero(0.0));
}

TEST(ReachGramianTest, SquareZeroClosedForm) {
  const HardInstance inst = Generate(Matrix{{1, 0, 1}, {0, 1, 1}}, 2);
  LinearSystem sys = inst.sys;
  sys.t0 = 0.5;
  sys.t1 = 2.0;
  const double t = sys.t1 - sys.t0;
  const Matrix& a = sys.a;
  // ∫_0^T (I + A s)(I + A s)^T ds.
  const Matrix expected = t * Matrix::Identity(sys.n(), sys.n()) +
                          t * t / 2.0 * (a + a.transpose()) +
                          t * t * t / 3.0 * a * a.transpose();
  const Matrix w = ReachGramian(sys, ActuatedSet::All(sys.n()), 20);
  EXPECT_LE((w - expected).norm(), 1e-8);
}

TEST(ReachGramianTest, SymmetricPositiveSemidefinite) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    LinearSystem sys;
    sys.a = RandomGaussian(4, 4, rng);
    sys.b = RandomGaussian(4, 2, rng);
    sys.x0 = Vector::Zero(4);
    sys.x1 = Vector::Zero(4);
    const ActuatedSet s{1 + trial % 4};
    const Matrix w = ReachGramian(sys, s, 200);
    EXPECT_LE((w - w.transpose()).norm(), 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(w);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10);
  }
}

TEST(SimulateRk4Test, ZeroInputFollowsDrift) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    LinearSystem sys;
    sys.a = RandomGaussian(3, 3, rng);
    sys.b = Matrix::Identity(3, 3);
    sys.x0 = RandomGaussian(3, 1, rng);
    sys.x1 = Vector::Zero(3);
    const Matrix x = SimulateRk4(sys, ActuatedSet::All(3), 1000,
                                 [](double) { return Vector::Zero(3); });
    const Vector expected = MatExp(sys.a, 1.0) * sys.x0;
    EXPECT_LE((x.col(1000) - expected).norm(), 1e-6 * expected.norm());
    EXPECT_EQ(Vector(x.col(0)), sys.x0);
  }
}

TEST(MinEnergyTransferTest, ScalarIntegratorUsesUnitInput) {
  const SynthesisResult r = MinEnergyTransfer(ScalarIntegrator(), {1}, 100);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.gramian_rank, 1);
  EXPECT_NEAR(r.terminal_error, 0.0, 1e-12);
  for (int k = 0; k <= 100; ++k) EXPECT_NEAR(r.inputs(0, k), 1.0, 1e-12);
  EXPECT_NEAR(r.energy, 1.0, 1e-12);
  ASSERT_EQ(r.grid.size(), 101u);
  EXPECT_EQ(r.grid.front(), 0.0);
  EXPECT_EQ(r.grid.back(), 1.0);
  EXPECT_TRUE(std::is_sorted(r.grid.begin(), r.grid.end()));
}

TEST(MinEnergyTransferTest, StarHubReachesTarget) {
  for (int n : {3, 5, 10}) {
    const SynthesisResult r = MinEnergyTransfer(StarSystem(n), {1}, 1000);
    EXPECT_TRUE(r.feasible);
    EXPECT_LE(r.terminal_error, 1e-3);
  }
}

TEST(MinEnergyTransferTest, LeafDrivesHubThroughDynamics) {
  const SynthesisResult r = MinEnergyTransfer(StarSystem(4), {2}, 1000);
  EXPECT_TRUE(r.feasible);
  EXPECT_LE(r.terminal_error, 1e-3);
}

TEST(MinEnergyTransferTest, UnreachableTargetReportsError) {
  LinearSystem sys = StarSystem(5);
  sys.x1 = Vector::Unit(5, 2);
  const SynthesisResult r = MinEnergyTransfer(sys, {1}, 1000);
  EXPECT_FALSE(r.feasible);
  EXPECT_NEAR(r.terminal_error, 1.0, 1e-6);
}

TEST(MinEnergyTransferTest, ErrorShrinksWithFinerGrid) {
  const LinearSystem sys = Oscillator();
  const ActuatedSet s{2};
  const SynthesisResult coarse = MinEnergyTransfer(sys, s, 100);
  const SynthesisResult fine = MinEnergyTransfer(sys, s, 1000);
  ASSERT_TRUE(fine.feasible);
  ASSERT_GT(coarse.terminal_error, 0.0);
  EXPECT_GE(coarse.terminal_error / std::max(fine.terminal_error, 1e-300),
            5.0);
  EXPECT_LE(fine.terminal_error, 1e-6);
}

TEST(MinEnergyTransferTest, EnergyMatchesGramianQuadraticForm) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    LinearSystem sys;
    sys.a = 0.5 * RandomGaussian(3, 3, rng);
    sys.b = RandomGaussian(3, 3, rng);
    sys.x0 = RandomGaussian(3, 1, rng);
    sys.x1 = RandomGaussian(3, 1, rng);
    const SynthesisResult r = MinEnergyTransfer(sys, ActuatedSet{1, 2, 3}, 400);
    ASSERT_TRUE(r.feasible);
    EXPECT_NEAR(r.energy, r.predicted_energy, 1e-6 * r.predicted_energy);
    EXPECT_LE(r.terminal_error, 1e-6 * std::max(1.0, sys.x1.norm()));
  }
}

TEST(MinEnergyTransferTest, OddGridCountWorks) {
  const SynthesisResult r = MinEnergyTransfer(StarSystem(3), {1}, 999);
  EXPECT_EQ(r.grid.size(), 1000u);
  EXPECT_LE(r.terminal_error, 1e-3);
  EXPECT_THROW(MinEnergyTransfer(StarSystem(3), {1}, 1), InputError);
}

}  // namespace
}  // namespace reachkit
