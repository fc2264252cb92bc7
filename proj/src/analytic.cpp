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

#include "giant/analytic.hpp"

#include <cmath>
#include <random>
#include <string>

#include "giant/errors.hpp"

namespace giant {
namespace {

constexpr double kMinSupercriticality = 1e-9;

void require_supercritical(double lambda, const char* who) {
  if (!std::isfinite(lambda) || !(lambda - 1.0 >= kMinSupercriticality)) {
    throw DomainError(std::string(who) + ": lambda must exceed 1, got " +
                      std::to_string(lambda));
  }
}

// x - log(1 + x), without the cancellation of the direct form near zero.
double excess_log(double x) {
  if (std::fabs(x) > 0.25) return x - std::log1p(x);
  double term = x * x;  // x^k, starting at k = 2
  double sum = 0.0;
  for (int k = 2; k < 80; ++k) {
    const double contrib = ((k % 2 == 0) ? term : -term) / k;
    sum += contrib;
    if (std::fabs(contrib) < 1e-18 * std::fabs(sum)) break;
    term *= x;
  }
  return sum;
}

// Shrinks [lo, hi] around the sign change of an increasing `f` until the
// midpoint stops moving.
template <class F>
double bisect_increasing(F f, double lo, double hi) {
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// One Newton step, kept only if it lowers the residual.
template <class F, class D>
double newton_polish(F f, D df, double x, double lo, double hi) {
  const double fx = f(x);
  const double slope = df(x);
  if (slope == 0.0 || !std::isfinite(slope)) return x;
  const double next = x - fx / slope;
  if (!(next > lo && next < hi)) return x;
  return std::fabs(f(next)) < std::fabs(fx) ? next : x;
}

}  // namespace

double conjugate_mu(double lambda) {
  require_supercritical(lambda, "conjugate_mu");
  // With lambda = 1 + e and mu = 1 - d, mu*exp(-mu) = lambda*exp(-lambda)
  // is equivalent to excess_log(-d) = excess_log(e), and excess_log(-d)
  // increases on (0, 1).
  const double target = excess_log(lambda - 1.0);
  auto residual = [target](double d) { return excess_log(-d) - target; };
  auto slope = [](double d) { return d / (1.0 - d); };
  double deficit = bisect_increasing(residual, 0.0, 1.0);
  deficit = newton_polish(residual, slope, deficit, 0.0, 1.0);
  return 1.0 - deficit;
}

double theta_lambda(double lambda) {
  require_supercritical(lambda, "theta_lambda");
  // (theta - 1 + exp(-lambda*theta)) / theta, increasing from 1 - lambda at 0.
  auto scaled = [lambda](double t) {
    if (t == 0.0) return 1.0 - lambda;
    return 1.0 + std::expm1(-lambda * t) / t;
  };
  double theta = bisect_increasing(scaled, 0.0, 1.0);
  auto residual = [lambda](double t) { return t + std::expm1(-lambda * t); };
  auto slope = [lambda](double t) { return 1.0 - lambda * std::exp(-lambda * t); };
  return newton_polish(residual, slope, theta, 0.0, 1.0);
}

ModelParams ModelParams::from_eps(std::size_t n, double eps) {
  if (n == 0) throw ConfigError("n must be positive");
  if (!std::isfinite(eps) || eps <= 0.0) {
    throw DomainError("eps must be positive, got " + std::to_string(eps));
  }
  ModelParams params;
  params.n = n;
  params.eps = eps;
  params.lambda = 1.0 + eps;
  params.p = params.lambda / static_cast<double>(n);
  if (params.p > 1.0) throw ConfigError("(1 + eps) / n exceeds 1");
  params.mu = conjugate_mu(params.lambda);
  params.theta = theta_lambda(params.lambda);
  return params;
}

ModelParams ModelParams::from_p(std::size_t n, double p) {
  if (n == 0) throw ConfigError("n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("p must lie in [0, 1], got " + std::to_string(p));
  }
  ModelParams params;
  params.n = n;
  params.p = p;
  params.lambda = p * static_cast<double>(n);
  params.eps = params.lambda - 1.0;
  if (params.lambda - 1.0 >= kMinSupercriticality) {
    params.mu = conjugate_mu(params.lambda);
    params.theta = theta_lambda(params.lambda);
  } else {
    params.mu = params.lambda;
    params.theta = 0.0;
  }
  return params;
}

double log_borel_pmf(double gamma, std::uint64_t t) {
  if (!(gamma > 0.0 && gamma <= 1.0) || t == 0) {
    throw DomainError("borel_pmf needs 0 < gamma <= 1 and t >= 1");
  }
  const double td = static_cast<double>(t);
  return (td - 1.0) * std::log(td) - std::lgamma(td + 1.0) - std::log(gamma) +
         td * (std::log(gamma) - gamma);
}

double borel_pmf(double gamma, std::uint64_t t) {
  return std::exp(log_borel_pmf(gamma, t));
}

double log_poisson_pmf(double mean, std::uint64_t k) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("poisson mean must be non-negative");
  }
  if (mean == 0.0) return k == 0 ? 0.0 : -INFINITY;
  const double kd = static_cast<double>(k);
  return kd * std::log(mean) - mean - std::lgamma(kd + 1.0);
}

double poisson_pmf(double mean, std::uint64_t k) {
  return std::exp(log_poisson_pmf(mean, k));
}

RootedTree sample_pgw_tree(double gamma, Rng& rng, std::size_t node_cap) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw DomainError("PGW offspring mean must lie in [0, 1)");
  }
  RootedTree tree;
  // The parent array doubles as the breadth-first queue.
  for (std::size_t head = 0; head < tree.parent.size(); ++head) {
    const std::uint64_t children = sample_poisson(gamma, rng);
    if (tree.parent.size() + children > node_cap) {
      throw ResourceError("PGW tree exceeded node cap of " +
                          std::to_string(node_cap));
    }
    tree.parent.insert(tree.parent.end(), children,
                       static_cast<std::uint32_t>(head));
  }
  return tree;
}

std::uint64_t sample_geometric(double q, Rng& rng) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("geometric success probability must lie in (0, 1)");
  }
  const double k = std::floor(std::log(rng.uniform_positive()) / std::log1p(-q));
  if (k >= 9.2e18) return std::numeric_limits<std::uint64_t>::max();
  return 1 + static_cast<std::uint64_t>(k);
}

std::uint64_t sample_poisson(double mean, Rng& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("poisson mean must be non-negative");
  }
  if (mean == 0.0) return 0;
  if (mean > 30.0) {
    std::poisson_distribution<long long> dist(mean);
    return static_cast<std::uint64_t>(dist(rng.engine()));
  }
  const double u = rng.uniform();
  double prob = std::exp(-mean);
  double cdf = prob;
  std::uint64_t k = 0;
  while (u >= cdf && k < 1000) {
    ++k;
    prob *= mean / static_cast<double>(k);
    cdf += prob;
  }
  return k;
}

double sample_normal(double mean, double variance, Rng& rng) {
  if (!(variance >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("normal variance must be non-negative");
  }
  if (variance == 0.0) return mean;
  std::normal_distribution<double> dist(mean, std::sqrt(variance));
  return dist(rng.engine());
}

}  // namespace giant
