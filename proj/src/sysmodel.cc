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

#include "reachkit/sysmodel.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reachkit/errors.h"

namespace reachkit {

namespace {

std::string Dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

void LinearSystem::Validate() const {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw InputError("A must be a non-empty square matrix, got " + Dims(a));
  }
  if (b.rows() != a.rows() || b.cols() == 0) {
    throw InputError("B must have " + std::to_string(a.rows()) +
                     " rows and at least one column, got " + Dims(b));
  }
  if (x0.size() != a.rows() || x1.size() != a.rows()) {
    throw InputError("x0 and x1 must have length " + std::to_string(a.rows()));
  }
  if (!std::isfinite(t0) || !std::isfinite(t1) || !(t1 > t0)) {
    throw InputError("need finite times with t1 > t0");
  }
  RequireFinite(a, "A");
  RequireFinite(b, "B");
  RequireFinite(x0, "x0");
  RequireFinite(x1, "x1");
}

bool LinearSystem::operator==(const LinearSystem& other) const {
  return a.rows() == other.a.rows() && a.cols() == other.a.cols() &&
         b.rows() == other.b.rows() && b.cols() == other.b.cols() &&
         x0.size() == other.x0.size() && x1.size() == other.x1.size() &&
         a == other.a && b == other.b && t0 == other.t0 && t1 == other.t1 &&
         x0 == other.x0 && x1 == other.x1;
}

ActuatedSet::ActuatedSet(std::vector<int> indices)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw InputError("actuated set has duplicate indices");
  }
  if (!indices_.empty() && indices_.front() < 1) {
    throw InputError("node indices are 1-based; got " +
                     std::to_string(indices_.front()));
  }
}

ActuatedSet ActuatedSet::All(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return ActuatedSet(std::move(all));
}

bool ActuatedSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

void ActuatedSet::RequireWithin(int n) const {
  if (max_index() > n) {
    throw InputError("node index " + std::to_string(max_index()) +
                     " outside 1.." + std::to_string(n));
  }
}

std::string ActuatedSet::ToString() const {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out << ", ";
    out << indices_[i];
  }
  out << '}';
  return out.str();
}

Matrix ActuationMask(const ActuatedSet& s, int n) {
  s.RequireWithin(n);
  Matrix mask = Matrix::Zero(n, n);
  for (int i : s.indices()) mask(i - 1, i - 1) = 1.0;
  return mask;
}

Matrix ReachabilityMatrix(const LinearSystem& sys, const ActuatedSet& s,
                          std::optional<int> max_power, const Tolerance& tol) {
  sys.Validate();
  const int n = sys.n();
  s.RequireWithin(n);
  const int last_power = max_power.value_or(n - 1);
  if (last_power < 0) throw InputError("max_power must be non-negative");

  Matrix block = sys.b;
  for (int row = 0; row < n; ++row) {
    if (!s.contains(row + 1)) block.row(row).setZero();
  }
  const Eigen::Index width = block.cols();

  Matrix result(n, width * (last_power + 1));
  result.leftCols(width) = block;
  Eigen::Index used = width;
  int rank = NumericalRank(block, tol);
  for (int power = 1; power <= last_power && rank < n; ++power) {
    block = sys.a * block;
    result.middleCols(used, width) = block;
    used += width;
    const int next_rank = NumericalRank(result.leftCols(used), tol);
    if (next_rank == rank) break;
    rank = next_rank;
  }
  return result.leftCols(used);
}

FeasibilityOracle::FeasibilityOracle(const LinearSystem& sys,
                                     const Tolerance& tol)
    : sys_(sys), tol_(tol) {
  sys_.Validate();
  tol_.Validate();
  target_ = sys_.x1 - MatExp(sys_.a, sys_.t1 - sys_.t0) * sys_.x0;
}

bool FeasibilityOracle::IsNegligible(double residual_sq) const {
  return residual_sq <= tol_.feas_rel * tol_.feas_rel *
                            std::max(1.0, target_.squaredNorm());
}

FeasibilityReport FeasibilityOracle::Check(const ActuatedSet& s) const {
  const Matrix reach = ReachabilityMatrix(sys_, s, std::nullopt, tol_);
  FeasibilityReport report;
  report.residual_sq = DistSqToRange(target_, reach, tol_);
  report.rank = NumericalRank(reach, tol_);
  report.feasible = IsNegligible(report.residual_sq);
  return report;
}

FeasibilityReport IsFeasible(const LinearSystem& sys, const ActuatedSet& s,
                             const Tolerance& tol) {
  return FeasibilityOracle(sys, tol).Check(s);
}

}  // namespace reachkit
