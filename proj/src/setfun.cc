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

#include "reachkit/setfun.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "reachkit/errors.h"

namespace reachkit {

namespace {

void RequireWithinCap(int ground_size, int cap) {
  // Masks are 32-bit.
  if (ground_size > cap || ground_size > 30) {
    throw CapExceededError("ground set of " + std::to_string(ground_size) +
                           " columns is too large for brute force (cap " +
                           std::to_string(cap) + ")");
  }
}

bool MonotoneOnTable(const std::vector<double>& f, int k) {
  const uint32_t full = (uint32_t{1} << k) - 1;
  for (uint32_t big = 0; big <= full; ++big) {
    // Every proper submask of `big`.
    for (uint32_t small = (big - 1) & big; small != big;
         small = (small - 1) & big) {
      if (f[small] < f[big] - kViolationSlack) return false;
      if (small == 0) break;
    }
  }
  return true;
}

}  // namespace

ColumnSelectionFunction::ColumnSelectionFunction(Vector v, Matrix m,
                                                 double exponent,
                                                 Tolerance tol)
    : v_(std::move(v)), m_(std::move(m)), exponent_(exponent), tol_(tol) {
  if (v_.size() != m_.rows()) {
    throw InputError("v has length " + std::to_string(v_.size()) +
                     " but M has " + std::to_string(m_.rows()) + " rows");
  }
  if (!(exponent_ > 0.0) || !std::isfinite(exponent_)) {
    throw InputError("exponent c must be a positive real");
  }
  RequireFinite(v_, "v");
  RequireFinite(m_, "M");
  tol_.Validate();
}

double ColumnSelectionFunction::Eval(const std::vector<int>& s) const {
  uint32_t mask = 0;
  for (int i : s) {
    if (i < 1 || i > ground_size()) {
      throw InputError("column index " + std::to_string(i) + " outside 1.." +
                       std::to_string(ground_size()));
    }
    if (ground_size() > 32) {
      throw InputError("ground set too large for mask evaluation");
    }
    mask |= uint32_t{1} << (i - 1);
  }
  return EvalMask(mask);
}

double ColumnSelectionFunction::EvalMask(uint32_t mask) const {
  const int count = std::popcount(mask);
  Matrix selected(m_.rows(), count);
  int col = 0;
  for (int j = 0; j < ground_size(); ++j) {
    if (mask & (uint32_t{1} << j)) selected.col(col++) = m_.col(j);
  }
  const double dist_sq = DistSqToRange(v_, selected, tol_);
  if (exponent_ == 2.0) return dist_sq;
  return std::pow(dist_sq, exponent_ / 2.0);
}

std::vector<uint32_t> GradedLexOrder(int k) {
  std::vector<uint32_t> order;
  order.reserve(size_t{1} << k);
  for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask) {
    order.push_back(mask);
  }
  std::stable_sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return MaskToIndices(a) < MaskToIndices(b);
  });
  return order;
}

std::vector<int> MaskToIndices(uint32_t mask) {
  std::vector<int> indices;
  for (int j = 0; mask != 0; ++j, mask >>= 1) {
    if (mask & 1u) indices.push_back(j + 1);
  }
  return indices;
}

std::vector<double> TabulateSubsets(const ColumnSelectionFunction& fn,
                                    int cap) {
  const int k = fn.ground_size();
  RequireWithinCap(k, cap);
  std::vector<double> table(size_t{1} << k);
  for (uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = fn.EvalMask(mask);
  }
  return table;
}

SetFunctionReport CheckSupermodular(const ColumnSelectionFunction& fn,
                                    int cap) {
  const int k = fn.ground_size();
  const std::vector<double> f = TabulateSubsets(fn, cap);
  const std::vector<uint32_t> graded = GradedLexOrder(k);

  // A by decreasing cardinality; graded-lex within a cardinality.
  std::vector<uint32_t> a_order = graded;
  std::stable_sort(a_order.begin(), a_order.end(), [](uint32_t a, uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });

  SetFunctionReport report;
  report.monotone_nonincreasing = MonotoneOnTable(f, k);
  report.supermodular = true;
  for (uint32_t a : a_order) {
    for (uint32_t a_prime : graded) {
      if ((a_prime & a) != a) continue;
      for (int x = 0; x < k; ++x) {
        const uint32_t bit = uint32_t{1} << x;
        if (a_prime & bit) continue;
        const double lhs = f[a] - f[a | bit];
        const double rhs = f[a_prime] - f[a_prime | bit];
        if (lhs < rhs - kViolationSlack) {
          report.supermodular = false;
          report.violation = SupermodularityViolation{
              MaskToIndices(a), MaskToIndices(a_prime), x + 1, lhs, rhs};
          return report;
        }
      }
    }
  }
  return report;
}

bool CheckMonotone(const ColumnSelectionFunction& fn, int cap) {
  return MonotoneOnTable(TabulateSubsets(fn, cap), fn.ground_size());
}

}  // namespace reachkit
