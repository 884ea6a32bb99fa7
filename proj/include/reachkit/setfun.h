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

// The column-selection set function
//
//   f(S) = dist(v, Range(M(S)))^c,
//
// where M(S) keeps only the columns of M indexed by S, and exhaustive
// checks of its monotonicity and supermodularity.
//
// Supermodularity here is the diminishing-returns condition
//
//   f(A) - f(A ∪ {x}) >= f(A') - f(A' ∪ {x})   for all A ⊆ A', x ∉ A'.
//
// Distance-to-subspace functions are always non-increasing but are not
// supermodular in general; CheckSupermodular finds a witness when one
// exists.

#ifndef REACHKIT_SETFUN_H_
#define REACHKIT_SETFUN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "reachkit/matcore.h"

namespace reachkit {

inline constexpr int kDefaultBruteForceCap = 12;
inline constexpr double kViolationSlack = 1e-9;

class ColumnSelectionFunction {
 public:
  // Throws InputError if v.size() != m.rows(), exponent <= 0, or data is
  // non-finite.
  ColumnSelectionFunction(Vector v, Matrix m, double exponent = 2.0,
                          Tolerance tol = {});

  // `s` holds 1-based column indices.
  double Eval(const std::vector<int>& s) const;
  // Bit i of `mask` selects column i+1.
  double EvalMask(uint32_t mask) const;

  int ground_size() const { return static_cast<int>(m_.cols()); }
  const Vector& v() const { return v_; }
  const Matrix& m() const { return m_; }
  double exponent() const { return exponent_; }

 private:
  Vector v_;
  Matrix m_;
  double exponent_;
  Tolerance tol_;
};

struct SupermodularityViolation {
  std::vector<int> a;        // A, 1-based
  std::vector<int> a_prime;  // A' ⊇ A
  int x = 0;                 // x ∉ A'
  double lhs = 0.0;          // f(A) - f(A ∪ {x})
  double rhs = 0.0;          // f(A') - f(A' ∪ {x}), exceeds lhs
};

struct SetFunctionReport {
  bool monotone_nonincreasing = false;
  bool supermodular = false;
  std::optional<SupermodularityViolation> violation;
};

// Values of f on every subset, indexed by bitmask. Throws CapExceededError
// when the ground set exceeds `cap`.
std::vector<double> TabulateSubsets(const ColumnSelectionFunction& fn,
                                    int cap = kDefaultBruteForceCap);

// Exhaustive diminishing-returns check over all A ⊆ A' and x ∉ A'.
//
// Witness order: A by decreasing cardinality, then A' ⊇ A, then x, each
// subset family in graded lexicographic order (size first, then
// lexicographic on sorted indices). Witnesses that avoid the f(∅)
// convention are therefore reported first. The result is deterministic.
SetFunctionReport CheckSupermodular(const ColumnSelectionFunction& fn,
                                    int cap = kDefaultBruteForceCap);

// True iff f(A) >= f(A') - slack for all A ⊆ A'.
bool CheckMonotone(const ColumnSelectionFunction& fn,
                   int cap = kDefaultBruteForceCap);

// Subsets of {0..k-1} as bitmasks in graded lexicographic order.
std::vector<uint32_t> GradedLexOrder(int k);

// 1-based sorted indices of the bits set in `mask`.
std::vector<int> MaskToIndices(uint32_t mask);

}  // namespace reachkit

#endif  // REACHKIT_SETFUN_H_
