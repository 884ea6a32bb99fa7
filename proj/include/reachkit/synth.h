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

// Constructive check of a feasible transfer: builds the reachability
// Gramian of (A, I(S)B) on [t0, t1], derives the minimum-energy input
//
//   u(t) = B^T I(S) e^{A^T (t1 - t)} W^+ w,   w = x1 - e^{A(t1 - t0)} x0,
//
// and integrates x' = A x + I(S) B u with classical RK4 to see how close
// x(t1) lands to x1.

#ifndef REACHKIT_SYNTH_H_
#define REACHKIT_SYNTH_H_

#include <functional>
#include <vector>

#include "reachkit/matcore.h"
#include "reachkit/sysmodel.h"

namespace reachkit {

inline constexpr int kDefaultGridIntervals = 1000;

// Composite Simpson weights for `intervals` equal steps of width h. An odd
// interval count finishes with Simpson's 3/8 rule over the last three
// steps. Requires intervals >= 2.
std::vector<double> QuadratureWeights(int intervals, double h);

// W = ∫_{t0}^{t1} e^{A(t1-τ)} I(S) B B^T I(S) e^{A^T(t1-τ)} dτ on
// `intervals` steps, symmetrized.
Matrix ReachGramian(const LinearSystem& sys, const ActuatedSet& s,
                    int intervals = kDefaultGridIntervals);

// RK4 trajectory of x' = A x + I(S) B u(t) from x0 on `intervals` equal
// steps over [t0, t1]. Column j is the state at grid point j.
Matrix SimulateRk4(const LinearSystem& sys, const ActuatedSet& s,
                   int intervals,
                   const std::function<Vector(double)>& input);

struct SynthesisResult {
  std::vector<double> grid;  // intervals + 1 points, t0 .. t1
  Matrix inputs;             // m x (intervals + 1)
  Matrix states;             // n x (intervals + 1)
  double terminal_error = 0.0;  // |x(t1) - x1|
  int gramian_rank = 0;
  bool feasible = false;        // verdict of IsFeasible for (sys, S)
  double energy = 0.0;          // ∫ |u|^2 dt on the grid
  double predicted_energy = 0.0;  // w^T W^+ w
};

SynthesisResult MinEnergyTransfer(const LinearSystem& sys,
                                  const ActuatedSet& s,
                                  int intervals = kDefaultGridIntervals,
                                  const Tolerance& tol = {});

}  // namespace reachkit

#endif  // REACHKIT_SYNTH_H_
