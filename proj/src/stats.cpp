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

#include "giant/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "giant/errors.hpp"

namespace giant {

double kolmogorov_survival(double x) {
  if (!(x > 0.0)) return 1.0;
  if (x < 0.2) return 1.0;  // the series converges slowly; true value > 0.99999
  // 2 * sum_{k>=1} (-1)^(k-1) exp(-2 k^2 x^2)
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() < 5 || ys.size() < 5) {
    throw SizeError("ks_two_sample: each sample needs at least 5 values");
  }
  std::vector<double> a(xs.begin(), xs.end());
  std::vector<double> b(ys.begin(), ys.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double n = static_cast<double>(a.size());
  const double m = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t distinct = 0;
  KsResult out;
  while (i < a.size() || j < b.size()) {
    double value;
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      value = a[i];
    } else {
      value = b[j];
    }
    while (i < a.size() && a[i] == value) ++i;
    while (j < b.size() && b[j] == value) ++j;
    ++distinct;
    out.D = std::max(out.D, std::fabs(static_cast<double>(i) / n -
                                      static_cast<double>(j) / m));
  }
  out.approx_ties = distinct < a.size() + b.size();
  const double en = std::sqrt(n * m / (n + m));
  out.p = kolmogorov_survival((en + 0.12 + 0.11 / en) * out.D);
  return out;
}

double chi_square_survival(double stat, double dof) {
  if (!(dof > 0.0)) throw DomainError("chi-square needs positive degrees of freedom");
  if (stat <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * stat);
}

ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> expected) {
  if (observed.size() != expected.size()) {
    throw std::invalid_argument("chi_square_gof: length mismatch");
  }
  const double total_obs = std::accumulate(observed.begin(), observed.end(), 0.0);
  const double total_exp = std::accumulate(expected.begin(), expected.end(), 0.0);
  if (std::fabs(total_obs - total_exp) > 0.5) {
    throw std::invalid_argument("chi_square_gof: observed and expected totals differ");
  }
  std::vector<double> obs;
  std::vector<double> exp;
  double group_obs = 0.0;
  double group_exp = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    group_obs += observed[k];
    group_exp += expected[k];
    if (group_exp >= 5.0) {
      obs.push_back(group_obs);
      exp.push_back(group_exp);
      group_obs = group_exp = 0.0;
    }
  }
  if (group_exp > 0.0 || group_obs > 0.0) {
    if (exp.empty()) {
      obs.push_back(group_obs);
      exp.push_back(group_exp);
    } else {
      obs.back() += group_obs;
      exp.back() += group_exp;
    }
  }
  if (exp.size() < 2) {
    throw SizeError("chi_square_gof: fewer than 2 bins with expected count >= 5");
  }
  ChiSquareResult out;
  for (std::size_t k = 0; k < exp.size(); ++k) {
    const double diff = obs[k] - exp[k];
    out.stat += diff * diff / exp[k];
  }
  out.bins = exp.size();
  out.dof = exp.size() - 1;
  out.p = chi_square_survival(out.stat, static_cast<double>(out.dof));
  return out;
}

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  s.mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double ss = 0.0;
  for (const double x : v) ss += (x - s.mean) * (x - s.mean);
  s.sd = v.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  s.min = v.front();
  s.max = v.back();
  auto q = [&v](double p) {
    const double pos = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
  };
  s.q10 = q(0.10);
  s.q25 = q(0.25);
  s.q50 = q(0.50);
  s.q75 = q(0.75);
  s.q90 = q(0.90);
  return s;
}

}  // namespace giant
