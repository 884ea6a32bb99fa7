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

#include <algorithm>
#include <cmath>
#include <string>

#include "reachkit/errors.h"

namespace reachkit {

SolveResult ExactMinReach(const LinearSystem& sys, const Tolerance& tol,
                          const ExactOptions& options) {
  const FeasibilityOracle oracle(sys, tol);
  const int n = sys.n();
  if (!options.budget.has_value() && n > options.max_n) {
    throw CapExceededError("exact solver limited to n <= " +
                           std::to_string(options.max_n) + " without a budget;"
                           " system has n = " + std::to_string(n));
  }
  if (options.budget.has_value() && *options.budget < 0) {
    throw InputError("budget must be non-negative");
  }
  const int max_k = std::min(n, options.budget.value_or(n));

  SolveResult result;
  for (int k = 0; k <= max_k; ++k) {
    std::optional<FeasibilityReport> found;
    result.nodes_explored +=
        ForEachCombination(n, k, [&](const std::vector<int>& combo) {
          ActuatedSet s(combo);
          FeasibilityReport report = oracle.Check(s);
          if (!report.feasible) return false;
          found = report;
          result.set = std::move(s);
          return true;
        });
    if (found) {
      result.cardinality = k;
      result.residual_sq = found->residual_sq;
      result.feasible = true;
      result.optimal = true;
      return result;
    }
  }
  if (max_k < n) {
    throw InfeasibleError("infeasible within budget of " +
                          std::to_string(max_k) + " nodes");
  }
  throw InfeasibleError("transfer is infeasible even with every node actuated");
}

SolveResult GreedyMinReach(const LinearSystem& sys, const Tolerance& tol,
                           std::optional<int> max_iters) {
  const FeasibilityOracle oracle(sys, tol);
  const int n = sys.n();
  const int iters = std::min(n, max_iters.value_or(n));

  SolveResult result;
  std::vector<int> chosen;
  FeasibilityReport current = oracle.Check(ActuatedSet());
  result.nodes_explored = 1;
  result.residual_trace.push_back(current.residual_sq);

  for (int iter = 0; iter < iters && !current.feasible; ++iter) {
    int best_node = 0;
    FeasibilityReport best;
    for (int node = 1; node <= n; ++node) {
      if (std::find(chosen.begin(), chosen.end(), node) != chosen.end()) {
        continue;
      }
      std::vector<int> candidate = chosen;
      candidate.push_back(node);
      FeasibilityReport report = oracle.Check(ActuatedSet(candidate));
      ++result.nodes_explored;
      if (best_node == 0 || report.residual_sq < best.residual_sq) {
        best_node = node;
        best = report;
      }
    }
    const bool improves =
        best.residual_sq < current.residual_sq - kGreedyMinImprovement;
    if (best_node == 0 || (!improves && !best.feasible)) break;
    chosen.push_back(best_node);
    current = best;
    result.residual_trace.push_back(current.residual_sq);
  }

  result.set = ActuatedSet(chosen);
  result.cardinality = result.set.size();
  result.residual_sq = current.residual_sq;
  result.feasible = current.feasible;
  result.optimal = false;
  return result;
}

void VarSelInstance::Validate() const {
  if (u.rows() == 0 || u.cols() == 0) {
    throw InputError("U must be non-empty");
  }
  if (z.size() != u.rows()) {
    throw InputError("z has length " + std::to_string(z.size()) +
                     " but U has " + std::to_string(u.rows()) + " rows");
  }
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw InputError("delta must be a finite non-negative number");
  }
  RequireFinite(u, "U");
  RequireFinite(z, "z");
}

bool VarSelInstance::operator==(const VarSelInstance& other) const {
  return u.rows() == other.u.rows() && u.cols() == other.u.cols() &&
         z.size() == other.z.size() && u == other.u && z == other.z &&
         delta == other.delta;
}

VarSelResult VarSelExact(const VarSelInstance& inst, const Tolerance& tol,
                         int cap) {
  inst.Validate();
  tol.Validate();
  const int l = static_cast<int>(inst.u.cols());
  if (l > cap) {
    throw CapExceededError("variable selection limited to l <= " +
                           std::to_string(cap) + " columns, got " +
                           std::to_string(l));
  }
  const double allowed =
      inst.delta + tol.feas_rel * std::max(1.0, inst.z.norm());

  for (int k = 0; k <= l; ++k) {
    std::optional<VarSelResult> found;
    ForEachCombination(l, k, [&](const std::vector<int>& support) {
      Matrix selected(inst.u.rows(), k);
      for (int j = 0; j < k; ++j) {
        selected.col(j) = inst.u.col(support[j] - 1);
      }
      Vector coeffs = Vector::Zero(k);
      if (k > 0) {
        Eigen::CompleteOrthogonalDecomposition<Matrix> cod(selected);
        cod.setThreshold(tol.rank_rel);
        coeffs = cod.solve(inst.z);
      }
      const double residual = (selected * coeffs - inst.z).norm();
      if (residual > allowed) return false;
      VarSelResult r;
      r.y = Vector::Zero(l);
      for (int j = 0; j < k; ++j) r.y(support[j] - 1) = coeffs(j);
      r.support = support;
      r.norm0 = k;
      r.residual = residual;
      found = std::move(r);
      return true;
    });
    if (found) return *found;
  }
  throw InfeasibleError("no support meets the residual budget " +
                        std::to_string(inst.delta));
}

}  // namespace reachkit
