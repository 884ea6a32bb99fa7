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

#include "reachkit/solvers.h"

#include <random>

#include "gtest/gtest.h"
#include "reachkit/errors.h"
#include "reachkit/hardness.h"
#include "reachkit/instance_io.h"
#include "test_support.h"

namespace reachkit {
namespace {

using testing::CounterexampleM;
using testing::CounterexampleV;
using testing::FixturePath;
using testing::RandomIntegerSystem;
using testing::StarSystem;

TEST(ForEachCombinationTest, LexicographicOrder) {
  std::vector<std::vector<int>> seen;
  const int64_t visited = ForEachCombination(4, 2, [&](const auto& c) {
    seen.push_back(c);
    return false;
  });
  EXPECT_EQ(visited, 6);
  const std::vector<std::vector<int>> expected = {{1, 2}, {1, 3}, {1, 4},
                                                  {2, 3}, {2, 4}, {3, 4}};
  EXPECT_EQ(seen, expected);
  EXPECT_EQ(ForEachCombination(3, 0, [](const auto&) { return false; }), 1);
  EXPECT_EQ(ForEachCombination(3, 4, [](const auto&) { return false; }), 0);
}

TEST(ExactMinReachTest, StarNeedsOneActuator) {
  for (int n : {3, 5, 10}) {
    const SolveResult r = ExactMinReach(StarSystem(n));
    EXPECT_EQ(r.set, ActuatedSet{1});
    EXPECT_EQ(r.cardinality, 1);
    EXPECT_TRUE(r.feasible);
    EXPECT_TRUE(r.optimal);
  }
}

TEST(ExactMinReachTest, DriftAloneGivesEmptySet) {
  LinearSystem sys = StarSystem(4);
  sys.x0 = Vector{{0.0, 1.0, 1.0, 0.0}};
  sys.x1 = MatExp(sys.a, 1.0) * sys.x0;
  const SolveResult r = ExactMinReach(sys);
  EXPECT_TRUE(r.set.empty());
  EXPECT_EQ(r.cardinality, 0);
  EXPECT_EQ(r.nodes_explored, 1);
}

TEST(ExactMinReachTest, IdentitySourceHardInstanceNeedsTwo) {
  const HardInstance inst = Generate(Matrix::Identity(2, 2), 2);
  const SolveResult r = ExactMinReach(inst.sys);
  EXPECT_EQ(r.cardinality, 2);
  EXPECT_EQ(testing::exact::MinCardinality(inst.sys), 2);
}

TEST(ExactMinReachTest, CapAndBudget) {
  const LinearSystem big = StarSystem(21);
  EXPECT_THROW(ExactMinReach(big), CapExceededError);
  EXPECT_EQ(ExactMinReach(big, {}, ExactOptions{1}).cardinality, 1);
  EXPECT_NO_THROW(ExactMinReach(big, {}, ExactOptions{std::nullopt, 21}));

  LinearSystem sys = StarSystem(3);
  sys.x1 = Vector{{0.0, 1.0, 1.0}};
  EXPECT_THROW(ExactMinReach(sys, {}, ExactOptions{1}), InfeasibleError);
  EXPECT_THROW(ExactMinReach(sys, {}, ExactOptions{-1}), InputError);
}

TEST(ExactMinReachTest, ReportsInfeasibleWithEveryNode) {
  LinearSystem sys = StarSystem(3);
  sys.b = Matrix::Zero(3, 1);
  try {
    ExactMinReach(sys);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_NE(std::string(e.what()).find("every node"), std::string::npos);
  }
}

// Independent referee: exact rational ranks over all 2^n subsets.
TEST(ExactMinReachTest, MatchesRationalEnumeration) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(2, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearSystem sys = RandomIntegerSystem(dim(rng), rng);
    const int expected = testing::exact::MinCardinality(sys);
    const SolveResult r = ExactMinReach(sys);
    EXPECT_EQ(r.cardinality, expected);
    EXPECT_TRUE(testing::exact::Feasible(sys, r.set.indices()));
  }
}

TEST(ExactMinReachTest, WitnessIsLexicographicallyLeast) {
  // Each leaf also reaches the hub, so several sets tie; the first in
  // lexicographic order wins.
  LinearSystem sys = StarSystem(4);
  EXPECT_EQ(ExactMinReach(sys).set, ActuatedSet{1});
  sys.x1 = Vector{{0.0, 0.0, 1.0, 1.0}};
  EXPECT_EQ(ExactMinReach(sys).set, (ActuatedSet{3, 4}));
}

TEST(GreedyMinReachTest, StarPicksHub) {
  const SolveResult r = GreedyMinReach(StarSystem(5));
  EXPECT_EQ(r.set, ActuatedSet{1});
  EXPECT_TRUE(r.feasible);
  EXPECT_FALSE(r.optimal);
  ASSERT_EQ(r.residual_trace.size(), 2u);
  EXPECT_DOUBLE_EQ(r.residual_trace[0], 1.0);
}

TEST(GreedyMinReachTest, FullSetWhenOnlyFullSetWorks) {
  LinearSystem sys;
  sys.a = Matrix::Zero(3, 3);
  sys.b = Matrix::Identity(3, 3);
  sys.x0 = Vector::Zero(3);
  sys.x1 = Vector::Ones(3);
  EXPECT_EQ(ExactMinReach(sys).cardinality, 3);
  const SolveResult r = GreedyMinReach(sys);
  EXPECT_EQ(r.cardinality, 3);
  EXPECT_TRUE(r.feasible);
}

TEST(GreedyMinReachTest, MaxItersStopsEarly) {
  LinearSystem sys;
  sys.a = Matrix::Zero(3, 3);
  sys.b = Matrix::Identity(3, 3);
  sys.x0 = Vector::Zero(3);
  sys.x1 = Vector::Ones(3);
  const SolveResult r = GreedyMinReach(sys, {}, 2);
  EXPECT_EQ(r.cardinality, 2);
  EXPECT_FALSE(r.feasible);
  EXPECT_NEAR(r.residual_sq, 1.0, 1e-12);
}

TEST(GreedyMinReachTest, StallReturnsInfeasibleSet) {
  // Only the second input column can move the state, and it points away from
  // the target.
  LinearSystem sys;
  sys.a = Matrix::Zero(2, 2);
  sys.b = Matrix{{0.0}, {1.0}};
  sys.x0 = Vector::Zero(2);
  sys.x1 = Vector{{1.0, 0.0}};
  const SolveResult r = GreedyMinReach(sys);
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(r.set.empty());
  EXPECT_DOUBLE_EQ(r.residual_sq, 1.0);
}

TEST(GreedyMinReachTest, PersistedGapFixture) {
  const InstanceFile file = LoadInstance(FixturePath("greedy_gap.json"));
  ASSERT_TRUE(file.system.has_value());
  const SolveResult exact = ExactMinReach(*file.system);
  const SolveResult greedy = GreedyMinReach(*file.system);
  EXPECT_EQ(exact.set, (ActuatedSet{1, 2}));
  EXPECT_TRUE(greedy.feasible);
  EXPECT_EQ(greedy.set, (ActuatedSet{1, 2, 6}));
  EXPECT_GT(greedy.cardinality, exact.cardinality);
  EXPECT_EQ(testing::exact::MinCardinality(*file.system), 2);
}

TEST(GreedyMinReachTest, NeverBeatsExactAndTraceIsNonIncreasing) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> dim(2, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const LinearSystem sys = RandomIntegerSystem(dim(rng), rng);
    const SolveResult exact = ExactMinReach(sys);
    const SolveResult greedy = GreedyMinReach(sys);
    if (greedy.feasible) EXPECT_GE(greedy.cardinality, exact.cardinality);
    EXPECT_EQ(greedy.residual_trace.size(), greedy.set.size() + 1);
    for (size_t i = 1; i < greedy.residual_trace.size(); ++i) {
      EXPECT_LE(greedy.residual_trace[i], greedy.residual_trace[i - 1]);
    }
    EXPECT_DOUBLE_EQ(greedy.residual_trace.back(), greedy.residual_sq);
  }
}

TEST(VarSelExactTest, IdentityPicksSingleColumn) {
  const VarSelResult r =
      VarSelExact({Matrix::Identity(3, 3), Vector{{1.0, 0.0, 0.0}}, 0.0});
  EXPECT_EQ(r.support, std::vector<int>{1});
  EXPECT_EQ(r.norm0, 1);
  EXPECT_NEAR(r.y(0), 1.0, 1e-12);
}

TEST(VarSelExactTest, CounterexampleNeedsAllColumns) {
  const VarSelResult r = VarSelExact({CounterexampleM(), CounterexampleV(), 0.0});
  EXPECT_EQ(r.support, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(r.norm0, 3);
  EXPECT_NEAR((CounterexampleM() * r.y - CounterexampleV()).norm(), 0.0, 1e-12);
}

TEST(VarSelExactTest, BudgetOneAllowsTwoColumns) {
  const VarSelResult r = VarSelExact({CounterexampleM(), CounterexampleV(), 1.0});
  EXPECT_EQ(r.support, (std::vector<int>{1, 2}));
  EXPECT_EQ(r.norm0, 2);
  EXPECT_NEAR(r.residual, 1.0, 1e-9);
}

TEST(VarSelExactTest, ErrorsAndCap) {
  EXPECT_THROW(VarSelExact({Matrix::Zero(2, 2), Vector::Ones(2), 0.5}),
               InfeasibleError);
  EXPECT_THROW(VarSelExact({Matrix::Identity(2, 2), Vector::Ones(3), 0.0}),
               InputError);
  EXPECT_THROW(VarSelExact({Matrix::Identity(2, 2), Vector::Ones(2), -1.0}),
               InputError);
  EXPECT_THROW(VarSelExact({Matrix::Ones(2, 21), Vector::Ones(2), 0.0}),
               CapExceededError);
  EXPECT_EQ(VarSelExact({Matrix::Ones(2, 21), Vector::Ones(2), 0.0}, {}, 21)
                .norm0,
            1);
}

TEST(VarSelExactTest, ZeroTargetNeedsNothing) {
  const VarSelResult r =
      VarSelExact({Matrix::Identity(2, 2), Vector::Zero(2), 0.0});
  EXPECT_EQ(r.norm0, 0);
  EXPECT_TRUE(r.support.empty());
}

}  // namespace
}  // namespace reachkit
