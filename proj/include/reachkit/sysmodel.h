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

// Continuous-time linear systems x' = A x + I(S) B u together with a
// transfer task x(t0) = x0 -> x(t1) = x1, and the reachability test that
// decides whether actuating the nodes in S makes the transfer possible.

#ifndef REACHKIT_SYSMODEL_H_
#define REACHKIT_SYSMODEL_H_

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "reachkit/matcore.h"

namespace reachkit {

struct LinearSystem {
  Matrix a;  // n x n dynamics
  Matrix b;  // n x m input map
  double t0 = 0.0;
  double t1 = 1.0;
  Vector x0;
  Vector x1;

  int n() const { return static_cast<int>(a.rows()); }
  int m() const { return static_cast<int>(b.cols()); }

  // Throws InputError on inconsistent dimensions, t1 <= t0, or non-finite
  // data.
  void Validate() const;

  bool operator==(const LinearSystem& other) const;
};

// A set of actuated nodes. Indices are 1-based, as in S ⊆ {1..n}, and are
// kept sorted and distinct.
class ActuatedSet {
 public:
  ActuatedSet() = default;
  // Throws InputError on duplicates or indices < 1.
  explicit ActuatedSet(std::vector<int> indices);
  ActuatedSet(std::initializer_list<int> indices)
      : ActuatedSet(std::vector<int>(indices)) {}

  static ActuatedSet All(int n);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(int index) const;
  int max_index() const { return indices_.empty() ? 0 : indices_.back(); }

  // Throws InputError if some index exceeds n.
  void RequireWithin(int n) const;

  // "{1, 3}"
  std::string ToString() const;

  bool operator==(const ActuatedSet&) const = default;

 private:
  std::vector<int> indices_;
};

// The diagonal n x n mask I(S).
Matrix ActuationMask(const ActuatedSet& s, int n);

// [I(S)B, A I(S)B, ..., A^p I(S)B]. p defaults to n-1; the concatenation
// stops early at the first block that leaves the numerical rank unchanged
// (that block is kept), since the Krylov range is stable from then on.
Matrix ReachabilityMatrix(const LinearSystem& sys, const ActuatedSet& s,
                          std::optional<int> max_power = std::nullopt,
                          const Tolerance& tol = {});

struct FeasibilityReport {
  bool feasible = false;
  double residual_sq = 0.0;  // squared distance of w to the reachable space
  int rank = 0;              // numerical rank of the reachability matrix
};

// Reusable feasibility test for one system. Precomputes the drift-free
// target w = x1 - e^{A(t1-t0)} x0 so that many actuated sets can be
// queried cheaply.
class FeasibilityOracle {
 public:
  FeasibilityOracle(const LinearSystem& sys, const Tolerance& tol);

  FeasibilityReport Check(const ActuatedSet& s) const;

  const Vector& target() const { return target_; }
  const LinearSystem& system() const { return sys_; }
  const Tolerance& tolerance() const { return tol_; }

  // True when a squared residual counts as zero for this target.
  bool IsNegligible(double residual_sq) const;

 private:
  LinearSystem sys_;
  Tolerance tol_;
  Vector target_;
};

// S makes the transfer feasible iff w lies in the range of
// ReachabilityMatrix(sys, S).
FeasibilityReport IsFeasible(const LinearSystem& sys, const ActuatedSet& s,
                             const Tolerance& tol = {});

}  // namespace reachkit

#endif  // REACHKIT_SYSMODEL_H_
