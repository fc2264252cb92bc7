// Copyright 2026 The Giant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive-oracle property suites shipped with the binary, so an installed
// build can check itself without the test tree.

#ifndef GIANT_SELFTEST_HPP_
#define GIANT_SELFTEST_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "giant/multigraph.hpp"
#include "giant/random.hpp"

namespace giant {

using PeelFn = std::function<std::vector<Vertex>(const Multigraph&)>;

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double wall_ms = 0.0;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool all_passed() const;
};

// Small random multigraph with occasional loops and parallel edges.
Multigraph random_small_graph(std::size_t n, std::size_t m, Rng& rng);

// Largest vertex set inducing minimum degree >= 2, by trying all 2^n subsets.
std::vector<Vertex> exhaustive_two_core(const Multigraph& g);

// All-pairs hop distances; kUnreachable off-component.
std::vector<std::vector<std::uint32_t>> floyd_warshall(const Multigraph& g);

// Deliberately broken peeling (one pass, no cascade) for mutation checks.
std::vector<Vertex> single_pass_peel(const Multigraph& g);

// Runs the 2-core subset, matching enumeration, Floyd-Warshall and KS
// uniformity suites. `peel` is the 2-core routine under test.
SelftestReport run_selftest(std::uint64_t seed, const PeelFn& peel);
SelftestReport run_selftest(std::uint64_t seed = 0);

void print_selftest(const SelftestReport& report, std::ostream& out);

}  // namespace giant

#endif  // GIANT_SELFTEST_HPP_
