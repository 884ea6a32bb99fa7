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

// Numerical kernel shared by every other module: numerical rank,
// orthonormal bases of column spaces, squared distance from a point to a
// column space, and the matrix exponential.
//
// Everything here is a pure function of its arguments.

#ifndef REACHKIT_MATCORE_H_
#define REACHKIT_MATCORE_H_

#include <string_view>

#include <Eigen/Dense>

namespace reachkit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Thresholds used wherever the toolkit has to turn floating point into a
// yes/no answer.
struct Tolerance {
  // Singular values below rank_rel * sigma_max count as zero.
  double rank_rel = 1e-9;
  // A residual r against a target w is "zero" when
  // r^2 <= feas_rel^2 * max(1, |w|^2).
  double feas_rel = 1e-9;

  // Throws InputError unless both values lie in (0, 1).
  void Validate() const;
};

// Throws InputError naming `what` if any entry is NaN or infinite.
void RequireFinite(const Matrix& m, std::string_view what);
void RequireFinite(const Vector& v, std::string_view what);

// Number of singular values >= tol.rank_rel * sigma_max. Zero for an
// all-zero or zero-column matrix.
int NumericalRank(const Matrix& m, const Tolerance& tol = {});

// Orthonormal basis of the numerical column space of `m`, one column per
// unit of numerical rank. A zero-column or all-zero `m` yields an
// m.rows() x 0 matrix, i.e. the subspace {0}.
Matrix RangeBasis(const Matrix& m, const Tolerance& tol = {});

// |v - Q Q^T v|^2 with Q = RangeBasis(m). Returns |v|^2 when `m` has no
// columns.
double DistSqToRange(const Vector& v, const Matrix& m,
                     const Tolerance& tol = {});

// True when |A^2|_F <= 1e-12 * max(1, |A|_F^2).
bool IsSquareZero(const Matrix& a);

// e^{A t}. Uses the exact two-term series I + A t when IsSquareZero(a),
// scaling and squaring of a truncated Taylor series otherwise.
Matrix MatExp(const Matrix& a, double t);

}  // namespace reachkit

#endif  // REACHKIT_MATCORE_H_
