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

// Searches random sparse integer systems for one where the greedy solver
// ends feasible with strictly more actuators than the exact solver, and
// prints it as an instance file.
//
//   gap_search [--n 6] [--seed 1] [--tries 100000]

#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "reachkit/errors.h"
#include "reachkit/instance_io.h"
#include "reachkit/solvers.h"

int main(int argc, char** argv) {
  CLI::App app{"search for a greedy-vs-exact gap instance"};
  int n = 6;
  uint64_t seed = 1;
  int tries = 100000;
  app.add_option("--n", n)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--tries", tries)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int attempt = 0; attempt < tries; ++attempt) {
    reachkit::LinearSystem sys;
    sys.a = reachkit::Matrix::Zero(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (coin(rng) < 0.3) sys.a(r, c) = entry(rng);
      }
    }
    sys.b = reachkit::Matrix::Identity(n, n);
    sys.x0 = reachkit::Vector::Zero(n);
    sys.x1 = reachkit::Vector::Zero(n);
    for (int i = 0; i < n; ++i) {
      if (coin(rng) < 0.6) sys.x1(i) = entry(rng);
    }
    if (sys.x1.isZero(0.0)) continue;

    try {
      const auto exact = reachkit::ExactMinReach(sys);
      const auto greedy = reachkit::GreedyMinReach(sys);
      if (greedy.feasible && greedy.cardinality > exact.cardinality) {
        std::cerr << "attempt " << attempt << ": exact "
                  << exact.set.ToString() << " greedy "
                  << greedy.set.ToString() << '\n';
        reachkit::InstanceFile file;
        file.system = sys;
        std::cout << reachkit::SerializeInstance(file);
        return 0;
      }
    } catch (const reachkit::InfeasibleError&) {
      continue;
    }
  }
  std::cerr << "no gap instance found\n";
  return 1;
}
