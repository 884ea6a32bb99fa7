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

#ifndef REACHKIT_CLI_H_
#define REACHKIT_CLI_H_

#include <ostream>

namespace reachkit {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,        // success / feasible / supermodular
  kExitNegative = 1,  // infeasible, violated, verification failed
  kExitInput = 2,     // usage or input error
  kExitCap = 3,       // brute-force or solver cap exceeded
};

// Runs the `reachkit` command line. Reports go to `out`, diagnostics to
// `err`. Returns one of ExitCode.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace reachkit

#endif  // REACHKIT_CLI_H_
