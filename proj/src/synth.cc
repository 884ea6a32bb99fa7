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

#include "reachkit/synth.h"

#include <string>

#include "reachkit/errors.h"

namespace reachkit {

namespace {

void RequireIntervals(int intervals) {
  if (intervals < 2) {
    throw InputError("need at least 2 grid intervals, got " +
                     std::to_string(intervals));
  }
}

Matrix MaskedInput(const LinearSystem& sys, const ActuatedSet& s) {
  return ActuationMask(s, sys.n()) * sys.b;
}

}  // namespace

std::vector<double> QuadratureWeights(int intervals, double h) {
  RequireIntervals(intervals);
  std::vector<double> w(intervals + 1, 0.0);
  const int simpson_end = (intervals % 2 == 0) ? intervals : intervals - 3;
  for (int i = 0; i + 2 <= simpson_end; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (simpson_end != intervals) {
    const int i = simpson_end;
    w[i] += 3.0 * h / 8.0;
    w[i + 1] += 9.0 * h / 8.0;
    w[i + 2] += 9.0 * h / 8.0;
    w[i + 3] += 3.0 * h / 8.0;
  }
  return w;
}

Matrix ReachGramian(const LinearSystem& sys, const ActuatedSet& s,
                    int intervals) {
  sys.Validate();
  RequireIntervals(intervals);
  const Matrix bs = MaskedInput(sys, s);
  const Matrix bbt = bs * bs.transpose();
  const double h = (sys.t1 - sys.t0) / intervals;
  const std::vector<double> weights = QuadratureWeights(intervals, h);

  const int n = sys.n();
  Matrix gramian = Matrix::Zero(n, n);
  if (s.empty()) return gramian;
  for (int j = 0; j <= intervals; ++j) {
    // τ_j = t0 + j h, so t1 - τ_j = (intervals - j) h.
    const Matrix e = MatExp(sys.a, (intervals - j) * h);
    gramian += weights[j] * (e * bbt * e.transpose());
  }
  return 0.5 * (gramian + gramian.transpose());
}

Matrix SimulateRk4(const LinearSystem& sys, const ActuatedSet& s,
                   int intervals,
                   const std::function<Vector(double)>& input) {
  sys.Validate();
  RequireIntervals(intervals);
  const Matrix bs = MaskedInput(sys, s);
  const double h = (sys.t1 - sys.t0) / intervals;
  auto rhs = [&](double t, const Vector& x) -> Vector {
    return sys.a * x + bs * input(t);
  };

  Matrix states(sys.n(), intervals + 1);
  Vector x = sys.x0;
  states.col(0) = x;
  for (int j = 0; j < intervals; ++j) {
    const double t = sys.t0 + j * h;
    const Vector k1 = rhs(t, x);
    const Vector k2 = rhs(t + h / 2, x + h / 2 * k1);
    const Vector k3 = rhs(t + h / 2, x + h / 2 * k2);
    const Vector k4 = rhs(t + h, x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    states.col(j + 1) = x;
  }
  return states;
}

SynthesisResult MinEnergyTransfer(const LinearSystem& sys,
                                  const ActuatedSet& s, int intervals,
                                  const Tolerance& tol) {
  const FeasibilityOracle oracle(sys, tol);
  RequireIntervals(intervals);
  const Vector& w = oracle.target();
  const Matrix bs = MaskedInput(sys, s);
  const Matrix gramian = ReachGramian(sys, s, intervals);

  // Thresholded pseudoinverse applied to w.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gramian);
  const Vector& lambda = eig.eigenvalues();
  const double lambda_max = lambda.size() > 0 ? lambda.maxCoeff() : 0.0;
  Vector costate = Vector::Zero(sys.n());
  int rank = 0;
  if (lambda_max > 0.0) {
    const Vector coords = eig.eigenvectors().transpose() * w;
    Vector scaled = Vector::Zero(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      if (lambda(i) >= tol.rank_rel * lambda_max) {
        scaled(i) = coords(i) / lambda(i);
        ++rank;
      }
    }
    costate = eig.eigenvectors() * scaled;
  }

  auto input = [&](double t) -> Vector {
    return bs.transpose() * MatExp(sys.a, sys.t1 - t).transpose() * costate;
  };

  SynthesisResult result;
  result.gramian_rank = rank;
  result.feasible = oracle.Check(s).feasible;
  result.predicted_energy = w.dot(costate);

  const double h = (sys.t1 - sys.t0) / intervals;
  result.grid.resize(intervals + 1);
  result.inputs.resize(sys.m(), intervals + 1);
  for (int j = 0; j <= intervals; ++j) {
    result.grid[j] = (j == intervals) ? sys.t1 : sys.t0 + j * h;
    result.inputs.col(j) = input(result.grid[j]);
  }
  const std::vector<double> weights = QuadratureWeights(intervals, h);
  for (int j = 0; j <= intervals; ++j) {
    result.energy += weights[j] * result.inputs.col(j).squaredNorm();
  }

  result.states = SimulateRk4(sys, s, intervals, input);
  result.terminal_error = (result.states.col(intervals) - sys.x1).norm();
  return result;
}

}  // namespace reachkit
