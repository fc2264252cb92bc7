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

#include "giant/selftest.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <utility>

#include "giant/decompose.hpp"
#include "giant/observables.hpp"
#include "giant/stats.hpp"

namespace giant {
namespace {

using EdgeKey = std::vector<std::pair<Vertex, Vertex>>;

EdgeKey canonical_edges(const Multigraph& g) {
  EdgeKey key;
  for (const Edge& e : g.edges()) key.emplace_back(e.u, e.v);
  std::sort(key.begin(), key.end());
  return key;
}

// Probability of each contracted outcome over all perfect matchings of the
// labeled half-edges.
std::map<EdgeKey, double> enumerate_matchings(const std::vector<std::uint32_t>& degrees) {
  std::vector<Vertex> owner;
  for (Vertex v = 0; v < degrees.size(); ++v) owner.insert(owner.end(), degrees[v], v);
  std::map<EdgeKey, double> counts;
  std::vector<char> used(owner.size(), 0);
  EdgeKey current;
  double total = 0.0;
  std::function<void()> recurse = [&]() {
    std::size_t first = 0;
    while (first < owner.size() && used[first]) ++first;
    if (first == owner.size()) {
      EdgeKey key = current;
      std::sort(key.begin(), key.end());
      counts[key] += 1.0;
      total += 1.0;
      return;
    }
    used[first] = 1;
    for (std::size_t j = first + 1; j < owner.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      current.emplace_back(std::min(owner[first], owner[j]), std::max(owner[first], owner[j]));
      recurse();
      current.pop_back();
      used[j] = 0;
    }
    used[first] = 0;
  };
  recurse();
  for (auto& [key, c] : counts) c /= total;
  return counts;
}

SuiteResult timed(const std::string& name, const std::function<std::string()>& body) {
  SuiteResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.passed = r.detail.rfind("FAIL", 0) != 0;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("FAIL exception: ") + e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

}  // namespace

bool SelftestReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed; });
}

Multigraph random_small_graph(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Edge> edges;
  if (n == 0) return Multigraph(0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    edges.push_back({u, v, false});
  }
  return Multigraph(n, std::move(edges));
}

std::vector<Vertex> exhaustive_two_core(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 20) throw std::length_error("exhaustive_two_core: n > 20");
  std::uint32_t best = 0;
  for (std::uint32_t set = 1; set < (1u << n); ++set) {
    if (std::popcount(set) <= std::popcount(best)) continue;
    std::vector<std::uint32_t> degree(n, 0);
    for (const Edge& e : g.edges()) {
      if (!((set >> e.u) & 1u) || !((set >> e.v) & 1u)) continue;
      if (e.is_loop()) {
        degree[e.u] += e.special ? 1 : 2;
      } else {
        ++degree[e.u];
        ++degree[e.v];
      }
    }
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (((set >> v) & 1u) && degree[v] < 2) ok = false;
    }
    if (ok) best = set;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if ((best >> v) & 1u) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> floyd_warshall(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::uint64_t kInf = kUnreachable;
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) d[e.u][e.v] = d[e.v][e.u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = static_cast<std::uint32_t>(d[i][j]);
  }
  return out;
}

std::vector<Vertex> single_pass_peel(const Multigraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) >= 2) out.push_back(v);
  }
  return out;
}

SelftestReport run_selftest(std::uint64_t seed) {
  return run_selftest(seed, [](const Multigraph& g) { return two_core(g); });
}

SelftestReport run_selftest(std::uint64_t seed, const PeelFn& peel) {
  SelftestReport report;

  report.suites.push_back(timed("two_core_vs_subsets", [&]() -> std::string {
    Rng rng = derive_stream(seed, "selftest:core", 0);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng.below(12);
      const std::size_t m = rng.below(2 * n + 1);
      const Multigraph g = random_small_graph(n, m, rng);
      if (peel(g) != exhaustive_two_core(g)) {
        return "FAIL graph " + std::to_string(trial) + " (n=" + std::to_string(n) +
               ", m=" + std::to_string(m) + ")";
      }
    }
    return "200 graphs, n <= 12";
  }));

  report.suites.push_back(timed("matching_enumeration", [&]() -> std::string {
    Rng rng = derive_stream(seed, "selftest:match", 0);
    const std::vector<std::vector<std::uint32_t>> cases = {
        {3, 3}, {2, 2, 2}, {1, 2, 3, 2}, {4, 4}, {1, 1, 1, 1, 2, 2}};
    constexpr int kSamples = 100'000;
    std::string detail;
    for (const auto& degrees : cases) {
      const auto exact = enumerate_matchings(degrees);
      std::map<EdgeKey, double> seen;
      for (const auto& [key, prob] : exact) seen[key] = 0.0;
      for (int s = 0; s < kSamples; ++s) {
        const auto key = canonical_edges(configuration_match(degrees, rng));
        const auto it = seen.find(key);
        if (it == seen.end()) return "FAIL impossible outcome";
        it->second += 1.0;
      }
      std::vector<double> observed;
      std::vector<double> expected;
      for (const auto& [key, prob] : exact) {
        observed.push_back(seen[key]);
        expected.push_back(prob * kSamples);
      }
      if (observed.size() < 2) continue;
      const auto chi = chi_square_gof(observed, expected);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%sp=%.3g", detail.empty() ? "" : " ", chi.p);
      detail += buf;
      if (chi.p <= 0.001) return "FAIL " + detail;
    }
    return detail;
  }));

  report.suites.push_back(timed("bfs_vs_floyd_warshall", [&]() -> std::string {
    Rng rng = derive_stream(seed, "selftest:fw", 0);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng.below(100);
      const std::size_t m = n + rng.below(n + 1);
      const Multigraph g = random_small_graph(n, m, rng);
      const auto fw = floyd_warshall(g);
      std::uint32_t diam = 0;
      for (Vertex s = 0; s < n; ++s) {
        const auto d = bfs_distances(g, s);
        if (d != fw[s]) return "FAIL distances on graph " + std::to_string(trial);
        for (const auto x : d) diam = std::max(diam, x);
      }
      if (is_connected(g) && diameter(g).value != diam) {
        return "FAIL diameter on graph " + std::to_string(trial);
      }
    }
    return "200 graphs, n <= 100";
  }));

  report.suites.push_back(timed("ks_uniformity", [&]() -> std::string {
    Rng rng = derive_stream(seed, "selftest:ks", 0);
    int below = 0;
    constexpr int kTrials = 1000;
    std::vector<double> xs(50);
    std::vector<double> ys(50);
    for (int t = 0; t < kTrials; ++t) {
      for (auto& x : xs) x = rng.uniform();
      for (auto& y : ys) y = rng.uniform();
      if (ks_two_sample(xs, ys).p < 0.05) ++below;
    }
    const double frac = static_cast<double>(below) / kTrials;
    char buf[64];
    std::snprintf(buf, sizeof buf, "fraction p<0.05 = %.3f", frac);
    if (frac < 0.02 || frac > 0.09) return std::string("FAIL ") + buf;
    return buf;
  }));

  return report;
}

void print_selftest(const SelftestReport& report, std::ostream& out) {
  char line[256];
  for (const SuiteResult& s : report.suites) {
    std::snprintf(line, sizeof line, "%-24s %-4s %9.1f ms  %s\n", s.name.c_str(),
                  s.passed ? "PASS" : "FAIL", s.wall_ms, s.detail.c_str());
    out << line;
  }
  out << (report.all_passed() ? "selftest: all suites passed\n"
                              : "selftest: FAILURES\n");
}

}  // namespace giant
