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

#ifndef GIANT_STATS_HPP_
#define GIANT_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace giant {

struct KsResult {
  double D = 0.0;
  double p = 1.0;
  bool approx_ties = false;  // pooled sample has repeated values
};

// Two-sample Kolmogorov-Smirnov. D is taken after every tied block, so equal
// values never split. p uses the asymptotic Kolmogorov series with the
// Stephens small-sample correction. Throws SizeError if a sample has fewer
// than 5 values.
KsResult ks_two_sample(std::span<const double> xs, std::span<const double> ys);

// P(K > x) for the Kolmogorov distribution.
double kolmogorov_survival(double x);

struct ChiSquareResult {
  double stat = 0.0;
  double p = 1.0;
  std::size_t bins = 0;  // after merging
  std::size_t dof = 0;
};

// Pearson goodness of fit. Adjacent bins are pooled left to right until each
// group expects at least 5; a short final group joins its predecessor. Throws
// std::invalid_argument on mismatched lengths or totals differing by more
// than 0.5, and SizeError when fewer than 2 bins survive.
ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> expected);

// Upper tail of the chi-square distribution.
double chi_square_survival(double stat, double dof);

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation (n - 1)
  double min = 0.0;
  double max = 0.0;
  double q10 = 0.0;
  double q25 = 0.0;
  double q50 = 0.0;
  double q75 = 0.0;
  double q90 = 0.0;
};

// Linear-interpolation quantiles. Empty input gives a zero summary.
Summary summarize(std::span<const double> values);

}  // namespace giant

#endif  // GIANT_STATS_HPP_
