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

#include "reachkit/hardness.h"

#include <algorithm>
#include <string>

#include "reachkit/errors.h"

namespace reachkit {

Matrix Phi(const Matrix& m, int n, int d) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows == 0 || cols == 0) throw InputError("phi needs a non-empty matrix");
  if (d < 1) throw InputError("stacking depth d must be at least 1");
  if (n < std::max(rows, cols) * d) {
    throw InputError("phi needs n >= max(m, l) * d = " +
                     std::to_string(std::max(rows, cols) * d) + ", got n = " +
                     std::to_string(n));
  }
  RequireFinite(m, "phi input");
  Matrix out = Matrix::Zero(n, n);
  for (int copy = 0; copy < d; ++copy) {
    out.block(copy * rows, n - cols, rows, cols) = m;
  }
  return out;
}

void HardInstance::Validate() const {
  sys.Validate();
  source.Validate();
  const auto& [m, l, d, n] = dims;
  if (m != source.u.rows() || l != source.u.cols() || d < 1 ||
      n != std::max(m, l) * (d + 1) || n != sys.n()) {
    throw InputError("hard instance dims do not match its matrices");
  }
  if (sys.a != Phi(source.u, n, d)) {
    throw InputError("hard instance A is not phi(U)");
  }
  if (sys.b != Matrix::Identity(n, n)) {
    throw InputError("hard instance B must be the identity");
  }
  Vector x1 = Vector::Zero(n);
  x1.head(m * d).setOnes();
  if (sys.x1 != x1 || !sys.x0.isZero(0.0)) {
    throw InputError("hard instance needs x0 = 0 and x1 = [1_md; 0]");
  }
  if (source.z != Vector::Ones(m)) {
    throw InputError("hard instance source target must be 1_m");
  }
  if (!IsSquareZero(sys.a)) {
    throw ReductionIntegrityError("generated A does not square to zero");
  }
}

HardInstance Generate(const Matrix& u, int d, double delta) {
  if (u.rows() == 0 || u.cols() == 0) {
    throw InputError("U must be non-empty");
  }
  if (d < 1) throw InputError("stacking depth d must be at least 1");
  const int m = static_cast<int>(u.rows());
  const int l = static_cast<int>(u.cols());
  const int n = std::max(m, l) * (d + 1);

  HardInstance inst;
  inst.dims = {m, l, d, n};
  inst.sys.a = Phi(u, n, d);
  inst.sys.b = Matrix::Identity(n, n);
  inst.sys.t0 = 0.0;
  inst.sys.t1 = 1.0;
  inst.sys.x0 = Vector::Zero(n);
  inst.sys.x1 = Vector::Zero(n);
  inst.sys.x1.head(m * d).setOnes();
  inst.source = {u, Vector::Ones(m), delta};
  inst.Validate();
  return inst;
}

ActuatedSet ForwardMap(const HardInstance& inst, const Vector& y,
                       const Tolerance& tol) {
  const auto& [m, l, d, n] = inst.dims;
  if (y.size() != l) {
    throw InputError("y must have length l = " + std::to_string(l));
  }
  RequireFinite(y, "y");
  const double miss = (inst.source.u * y - Vector::Ones(m)).squaredNorm();
  if (miss > tol.feas_rel * tol.feas_rel * std::max(1.0, double(m))) {
    throw InputError("forward map needs U y = 1_m; squared miss is " +
                     std::to_string(miss));
  }
  std::vector<int> mapped;
  for (int k = 1; k <= l; ++k) {
    if (y(k - 1) != 0.0) mapped.push_back(k + n - l);
  }
  ActuatedSet s(std::move(mapped));
  const FeasibilityReport report = IsFeasible(inst.sys, s, tol);
  if (!report.feasible) {
    throw ReductionIntegrityError("forward-mapped set " + s.ToString() +
                                  " does not reach x1 (residual^2 = " +
                                  std::to_string(report.residual_sq) + ")");
  }
  return s;
}

BlockSelection FindDisjointBlock(const ActuatedSet& s, int m, int d) {
  if (m < 1 || d < 1) throw InputError("block search needs m, d >= 1");
  for (int kappa = 0; kappa < d; ++kappa) {
    const int first = kappa * m + 1;
    const int last = kappa * m + m;
    const auto& idx = s.indices();
    auto it = std::lower_bound(idx.begin(), idx.end(), first);
    if (it != idx.end() && *it <= last) continue;
    BlockSelection selection;
    selection.kappa = kappa;
    for (int i = first; i <= last; ++i) selection.block.push_back(i);
    return selection;
  }
  throw InfeasibleError("actuated set " + s.ToString() + " meets all " +
                        std::to_string(d) + " blocks of size " +
                        std::to_string(m));
}

ExtractionResult ExtractSolution(const HardInstance& inst,
                                 const ActuatedSet& s, const Vector& xhat1,
                                 const Tolerance& tol) {
  const auto& [m, l, d, n] = inst.dims;
  if (xhat1.size() != n) {
    throw InputError("xhat1 must have length n = " + std::to_string(n));
  }
  s.RequireWithin(n);

  LinearSystem probe = inst.sys;
  probe.x1 = xhat1;
  const FeasibilityReport reach = IsFeasible(probe, s, tol);
  if (!reach.feasible) {
    throw InputError("xhat1 is not reachable under " + s.ToString());
  }

  ExtractionResult result;
  result.block = FindDisjointBlock(s, m, d);
  const Vector xhat_block = xhat1.segment(result.block.kappa * m, m);

  // Only nodes n-l+1..n carry columns of U.
  std::vector<int> u_columns;
  for (int index : s.indices()) {
    if (index > n - l) u_columns.push_back(index - (n - l));
  }
  Matrix selected(m, static_cast<Eigen::Index>(u_columns.size()));
  for (size_t j = 0; j < u_columns.size(); ++j) {
    selected.col(j) = inst.source.u.col(u_columns[j] - 1);
  }

  result.y = Vector::Zero(l);
  if (!u_columns.empty()) {
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(selected);
    cod.setThreshold(tol.rank_rel);
    const Vector coeffs = cod.solve(xhat_block);
    for (size_t j = 0; j < u_columns.size(); ++j) {
      result.y(u_columns[j] - 1) = coeffs(j);
    }
  }
  const Vector fit = inst.source.u * result.y;
  result.fit_residual_sq = (fit - xhat_block).squaredNorm();
  result.target_residual_sq = (fit - Vector::Ones(m)).squaredNorm();
  return result;
}

}  // namespace reachkit
