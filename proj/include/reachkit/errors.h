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

#ifndef REACHKIT_ERRORS_H_
#define REACHKIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace reachkit {

// Malformed input: bad dimensions, out-of-range indices, non-finite
// entries, unparsable files. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A brute-force routine was asked to enumerate more than its cap allows.
// The CLI maps this to exit code 3.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

// No solution exists (or none within the requested budget).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// The hardness reduction produced something its construction guarantees
// cannot happen. Indicates a numerical kernel bug, not a user error.
class ReductionIntegrityError : public std::logic_error {
 public:
  explicit ReductionIntegrityError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace reachkit

#endif  // REACHKIT_ERRORS_H_
