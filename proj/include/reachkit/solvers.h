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

// Solvers for minimal reachability (fewest actuated nodes making one
// transfer feasible) and the sparse variable-selection problem
//
//   minimize |y|_0  subject to  |U y - z|_2 <= delta.
//
// All solvers break ties lexicographically so results are reproducible.

#ifndef REACHKIT_SOLVERS_H_
#define REACHKIT_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "reachkit/matcore.h"
#include "reachkit/sysmodel.h"

namespace reachkit {

inline constexpr int kDefaultExactCap = 20;
inline constexpr int kDefaultVarSelCap = 20;
// Greedy only accepts a node whose residual drop exceeds this.
inline constexpr double kGreedyMinImprovement = 1e-12;

struct SolveResult {
  ActuatedSet set;
  int cardinality = 0;
  double residual_sq = 0.0;
  bool feasible = false;
  bool optimal = false;  // set only by the exact solver
  int64_t nodes_explored = 0;
  // Greedy: residual after 0, 1, 2, ... additions. Empty for exact.
  std::vector<double> residual_trace;
};

struct ExactOptions {
  // Largest cardinality to try. Required when n exceeds max_n.
  std::optional<int> budget;
  int max_n = kDefaultExactCap;
};

// Tries every subset of size 0, 1, 2, ... in lexicographic order and
// returns the first feasible one, which therefore has minimum cardinality.
//
// Throws CapExceededError if n > options.max_n and no budget is given,
// InfeasibleError if nothing within the budget (or even the full node set)
// works.
SolveResult ExactMinReach(const LinearSystem& sys, const Tolerance& tol = {},
                          const ExactOptions& options = {});

// Marginal-decrease greedy. Starting from the empty set, repeatedly adds
// the node whose inclusion gives the smallest residual (smallest index on
// ties). Stops when feasible, when no node improves the residual by more
// than kGreedyMinImprovement, or after max_iters additions. The result may
// be infeasible; `feasible` says so.
SolveResult GreedyMinReach(const LinearSystem& sys, const Tolerance& tol = {},
                           std::optional<int> max_iters = std::nullopt);

struct VarSelInstance {
  Matrix u;  // m x l
  Vector z;  // m
  double delta = 0.0;

  void Validate() const;
  bool operator==(const VarSelInstance& other) const;
};

struct VarSelResult {
  Vector y;
  std::vector<int> support;  // 1-based
  int norm0 = 0;
  double residual = 0.0;  // |U y - z|_2
};

// Enumerates supports by size, lexicographically within a size, and fits z
// by minimum-norm least squares on each. Returns the first support whose
// residual is within delta (plus tol.feas_rel * max(1, |z|) of slack).
//
// Throws CapExceededError when l > cap, InfeasibleError when no support
// meets the budget.
VarSelResult VarSelExact(const VarSelInstance& inst, const Tolerance& tol = {},
                         int cap = kDefaultVarSelCap);

// Calls `visit` with every k-subset of {1..n} in lexicographic order until
// it returns true. Returns the number of subsets visited.
template <typename Visitor>
int64_t ForEachCombination(int n, int k, Visitor&& visit) {
  if (k < 0 || k > n) return 0;
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i + 1;
  int64_t visited = 0;
  while (true) {
    ++visited;
    if (visit(static_cast<const std::vector<int>&>(combo))) return visited;
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i + 1) --i;
    if (i < 0) return visited;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
}

}  // namespace reachkit

#endif  // REACHKIT_SOLVERS_H_
