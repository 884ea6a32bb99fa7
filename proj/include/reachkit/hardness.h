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

// Reduction from sparse variable selection (U y = 1_m with few non-zeros)
// to minimal reachability.
//
// Given U (m x l) and a stacking depth d, the generated system has
//
//   n  = max(m, l) * (d + 1)
//   A  = Phi(U, n, d)      d copies of U stacked in the top-right corner
//   B  = I,  x0 = 0,  x1 = [1_{md}; 0_{n-md}]
//
// Since A^2 = 0 the reachable space of S is Range[I(S), A I(S)]. Actuating
// node k + n - l contributes column k of U (repeated d times), so a sparse
// y maps to an actuated set of the same size (ForwardMap). Conversely, an
// actuated set smaller than d leaves some m-row block of the first md rows
// untouched, and those rows of any reachable state are a combination of
// at most |S| columns of U (ExtractSolution).

#ifndef REACHKIT_HARDNESS_H_
#define REACHKIT_HARDNESS_H_

#include <vector>

#include "reachkit/matcore.h"
#include "reachkit/solvers.h"
#include "reachkit/sysmodel.h"

namespace reachkit {

struct HardnessDims {
  int m = 0;
  int l = 0;
  int d = 0;
  int n = 0;

  bool operator==(const HardnessDims&) const = default;
};

struct HardInstance {
  LinearSystem sys;
  VarSelInstance source;  // (U, 1_m, delta)
  HardnessDims dims;

  // Throws InputError unless every structural invariant holds.
  void Validate() const;
};

// n x n matrix holding d vertically stacked copies of M in rows 1..md and
// columns n-l+1..n, zero elsewhere. Requires d >= 1 and n >= max(m, l) d.
Matrix Phi(const Matrix& m, int n, int d);

HardInstance Generate(const Matrix& u, int d, double delta = 0.0);

// Maps y with U y = 1_m to {k + n - l : y_k != 0} and confirms the result
// makes x1 reachable. Throws InputError if U y differs from 1_m beyond
// tolerance, ReductionIntegrityError if the mapped set is infeasible.
ActuatedSet ForwardMap(const HardInstance& inst, const Vector& y,
                       const Tolerance& tol = {});

struct BlockSelection {
  int kappa = 0;
  std::vector<int> block;  // {kappa m + 1, ..., kappa m + m}
};

// Smallest kappa in 0..d-1 whose block of m consecutive indices misses S.
// Throws InfeasibleError when every block is hit.
BlockSelection FindDisjointBlock(const ActuatedSet& s, int m, int d);

struct ExtractionResult {
  Vector y;                        // length l, supported on actuated U-columns
  BlockSelection block;
  double fit_residual_sq = 0.0;    // |U y - xhat_E|^2
  double target_residual_sq = 0.0; // |U y - 1_m|^2
};

// Recovers a sparse y from an actuated set S and a state xhat1 reachable
// under S: picks a block E disjoint from S, then fits the rows of xhat1 in
// E with the U-columns that S actuates (minimum-norm least squares).
// |y|_0 <= |S| always.
//
// Throws InputError if xhat1 is not reachable under S, InfeasibleError if
// no disjoint block exists.
ExtractionResult ExtractSolution(const HardInstance& inst,
                                 const ActuatedSet& s, const Vector& xhat1,
                                 const Tolerance& tol = {});

}  // namespace reachkit

#endif  // REACHKIT_HARDNESS_H_
