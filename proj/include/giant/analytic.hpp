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

// Scalar solvers and the handful of distributions the graph models draw from.

#ifndef GIANT_ANALYTIC_HPP_
#define GIANT_ANALYTIC_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "giant/random.hpp"

namespace giant {

// The conjugate mu < 1 of lambda > 1: the other root of x*exp(-x) = c with
// c = lambda*exp(-lambda). Accurate to ~1e-15 absolute even for lambda within
// 1e-9 of one.
double conjugate_mu(double lambda);

// Survival probability: the unique root in (0,1) of theta = 1 - exp(-lambda*theta).
double theta_lambda(double lambda);

// Single source of the analytic constants tied to (n, p = lambda/n).
struct ModelParams {
  std::size_t n = 0;
  double eps = 0.0;
  double lambda = 1.0;
  double p = 0.0;
  double mu = 1.0;     // conjugate of lambda; equals lambda when lambda <= 1
  double theta = 0.0;  // survival probability; zero when lambda <= 1

  // Supercritical parameterization; requires eps > 0.
  static ModelParams from_eps(std::size_t n, double eps);
  // Any p in [0, 1]. Subcritical values are allowed here (G(n,p) is defined
  // for them) with mu = lambda and theta = 0.
  static ModelParams from_p(std::size_t n, double p);

  bool supercritical() const { return lambda > 1.0; }
};

// Borel(gamma): law of the total progeny of a Poisson(gamma) Galton-Watson
// tree. Evaluated in log space, fine for t well past 1e6.
double log_borel_pmf(double gamma, std::uint64_t t);
double borel_pmf(double gamma, std::uint64_t t);

double log_poisson_pmf(double mean, std::uint64_t k);
double poisson_pmf(double mean, std::uint64_t k);

// Family tree, nodes numbered in breadth-first order; node 0 is the root.
struct RootedTree {
  static constexpr std::uint32_t kNoParent =
      std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> parent{kNoParent};

  std::size_t size() const { return parent.size(); }
};

inline constexpr std::size_t kDefaultTreeNodeCap = 100'000'000;

// Throws ResourceError once the tree would exceed `node_cap` nodes.
RootedTree sample_pgw_tree(double gamma, Rng& rng,
                           std::size_t node_cap = kDefaultTreeNodeCap);

// P(k) = (1-q)^(k-1) q on {1, 2, ...}.
std::uint64_t sample_geometric(double q, Rng& rng);

// Exact inversion for mean <= 30, std::poisson_distribution above.
std::uint64_t sample_poisson(double mean, Rng& rng);

double sample_normal(double mean, double variance, Rng& rng);

}  // namespace giant

#endif  // GIANT_ANALYTIC_HPP_
