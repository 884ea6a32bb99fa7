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

#include <algorithm>
#include <cmath>
#include <string>

#include "reachkit/errors.h"

namespace reachkit {

namespace {

// Taylor terms beyond this are below double precision once the scaled
// argument has 1-norm <= 1/2.
constexpr int kMaxTaylorTerms = 30;
constexpr double kScaledNormTarget = 0.5;

int RankFromSingularValues(const Vector& sv, double rank_rel) {
  if (sv.size() == 0 || !(sv(0) > 0.0)) return 0;
  const double cutoff = rank_rel * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) >= cutoff) ++rank;
  }
  return rank;
}

}  // namespace

void Tolerance::Validate() const {
  auto in_open_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (!in_open_unit(rank_rel)) {
    throw InputError("rank tolerance must lie in (0, 1), got " +
                     std::to_string(rank_rel));
  }
  if (!in_open_unit(feas_rel)) {
    throw InputError("feasibility tolerance must lie in (0, 1), got " +
                     std::to_string(feas_rel));
  }
}

void RequireFinite(const Matrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw InputError(std::string(what) + " contains non-finite entries");
  }
}

void RequireFinite(const Vector& v, std::string_view what) {
  if (!v.allFinite()) {
    throw InputError(std::string(what) + " contains non-finite entries");
  }
}

int NumericalRank(const Matrix& m, const Tolerance& tol) {
  RequireFinite(m, "matrix");
  if (m.cols() == 0 || m.rows() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(m);
  return RankFromSingularValues(svd.singularValues(), tol.rank_rel);
}

Matrix RangeBasis(const Matrix& m, const Tolerance& tol) {
  RequireFinite(m, "matrix");
  if (m.cols() == 0 || m.rows() == 0) return Matrix(m.rows(), 0);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const int rank = RankFromSingularValues(svd.singularValues(), tol.rank_rel);
  return svd.matrixU().leftCols(rank);
}

double DistSqToRange(const Vector& v, const Matrix& m, const Tolerance& tol) {
  if (v.size() != m.rows()) {
    throw InputError("vector length " + std::to_string(v.size()) +
                     " does not match matrix rows " +
                     std::to_string(m.rows()));
  }
  RequireFinite(v, "vector");
  const Matrix q = RangeBasis(m, tol);
  if (q.cols() == 0) return v.squaredNorm();
  const Vector residual = v - q * (q.transpose() * v);
  return residual.squaredNorm();
}

bool IsSquareZero(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  const double norm_sq = a.squaredNorm();
  return (a * a).norm() <= 1e-12 * std::max(1.0, norm_sq);
}

Matrix MatExp(const Matrix& a, double t) {
  if (a.rows() != a.cols()) {
    throw InputError("matrix exponential needs a square matrix, got " +
                     std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()));
  }
  RequireFinite(a, "matrix");
  if (!std::isfinite(t)) throw InputError("time argument is not finite");
  const Eigen::Index n = a.rows();
  const Matrix identity = Matrix::Identity(n, n);
  if (IsSquareZero(a)) return identity + a * t;

  const Matrix at = a * t;
  const double norm1 = at.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > kScaledNormTarget) {
    squarings = static_cast<int>(
        std::ceil(std::log2(norm1 / kScaledNormTarget)));
  }
  const Matrix x = at / std::ldexp(1.0, squarings);

  Matrix result = identity;
  Matrix term = identity;
  for (int k = 1; k <= kMaxTaylorTerms; ++k) {
    term = term * x / static_cast<double>(k);
    result += term;
    if (term.norm() <= 1e-18 * result.norm()) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace reachkit
