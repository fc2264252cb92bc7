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

#include "giant/observables.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "giant/errors.hpp"

namespace giant {
namespace {

struct Sweep {
  std::vector<std::uint32_t> dist;
  Vertex farthest = 0;
  std::uint32_t ecc = 0;
  std::size_t reached = 0;
};

Sweep sweep(const Multigraph& g, Vertex source) {
  Sweep s;
  s.dist = bfs_distances(g, source);
  s.farthest = source;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (s.dist[v] == kUnreachable) continue;
    ++s.reached;
    if (s.dist[v] > s.ecc) {
      s.ecc = s.dist[v];
      s.farthest = v;
    }
  }
  return s;
}

void require_connected(const Multigraph& g, const char* who) {
  if (g.num_vertices() == 0) throw StructureError(std::string(who) + ": empty graph");
  if (!is_connected(g)) throw StructureError(std::string(who) + ": graph is disconnected");
}

double quantile(std::vector<std::uint32_t>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (static_cast<double>(sorted[hi]) - sorted[lo]);
}

// Pruned exact diameter: every vertex keeps eccentricity bounds, and a vertex
// leaves the candidate set once its upper bound cannot beat the best lower
// bound. BFS sources alternate between the largest upper and the smallest
// lower bound.
DiameterResult pruned_diameter(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> lower(n, 0);
  std::vector<std::uint32_t> upper(n, kInf);
  std::vector<Vertex> candidates(n);
  for (Vertex v = 0; v < n; ++v) candidates[v] = v;
  std::uint32_t best_lower = 0;
  std::uint32_t best_upper = kInf;
  DiameterResult out;
  bool pick_upper = true;
  while (!candidates.empty() && best_lower < best_upper) {
    Vertex source = candidates.front();
    for (const Vertex w : candidates) {
      if (pick_upper ? upper[w] > upper[source] : lower[w] < lower[source]) source = w;
    }
    pick_upper = !pick_upper;
    const Sweep s = sweep(g, source);
    ++out.bfs_runs;
    best_lower = std::max(best_lower, s.ecc);
    best_upper = std::min(best_upper, 2 * s.ecc);
    for (const Vertex w : candidates) {
      const std::uint32_t d = s.dist[w];
      lower[w] = std::max({lower[w], d, s.ecc - d});
      upper[w] = std::min(upper[w], s.ecc + d);
      best_lower = std::max(best_lower, lower[w]);
    }
    std::erase_if(candidates, [&](Vertex w) { return upper[w] <= best_lower; });
  }
  out.value = best_lower;
  out.exact = true;
  return out;
}

}  // namespace

std::size_t max_two_path(const CoreDecomposition& d) {
  if (d.path_lengths.empty()) throw StructureError("max_two_path: kernel has no edge");
  return *std::max_element(d.path_lengths.begin(), d.path_lengths.end());
}

DiameterResult diameter(const Multigraph& g, DiameterMode mode) {
  require_connected(g, "diameter");
  switch (mode) {
    case DiameterMode::kExact:
      return pruned_diameter(g);
    case DiameterMode::kAllSources: {
      DiameterResult out;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out.value = std::max(out.value, sweep(g, v).ecc);
        ++out.bfs_runs;
      }
      return out;
    }
    case DiameterMode::kDoubleSweep: {
      const Sweep first = sweep(g, 0);
      const Sweep second = sweep(g, first.farthest);
      return {std::max(first.ecc, second.ecc), false, 2};
    }
  }
  throw std::logic_error("unknown diameter mode");
}

CoreView core_view(const Multigraph& g, const CoreDecomposition& d) {
  CoreView view;
  view.core = induced_subgraph(g, d.core_vertices);
  view.kernel.reserve(d.kernel_vertex_map.size());
  for (const Vertex v : d.kernel_vertex_map) {
    const auto it = std::lower_bound(d.core_vertices.begin(), d.core_vertices.end(), v);
    if (it == d.core_vertices.end() || *it != v) {
      throw StructureError("kernel vertex outside the 2-core");
    }
    view.kernel.push_back(static_cast<Vertex>(it - d.core_vertices.begin()));
  }
  return view;
}

DistanceSample typical_kernel_distance(const CoreView& view, Rng& rng,
                                       std::size_t pairs,
                                       std::size_t targets_per_source) {
  const std::size_t k = view.kernel.size();
  if (k < 2) throw StructureError("typical_kernel_distance: fewer than 2 kernel vertices");
  if (targets_per_source == 0) targets_per_source = 1;
  DistanceSample out;
  std::vector<std::uint32_t> values;
  values.reserve(pairs);
  std::size_t drawn = 0;
  while (drawn < pairs) {
    const std::size_t a = rng.below(k);
    const auto dist = bfs_distances(view.core, view.kernel[a]);
    const std::size_t batch = std::min(targets_per_source, pairs - drawn);
    for (std::size_t i = 0; i < batch; ++i) {
      std::size_t b = rng.below(k - 1);
      if (b >= a) ++b;  // uniform over the other kernel vertices
      const std::uint32_t d = dist[view.kernel[b]];
      if (d == kUnreachable) {
        ++out.unreachable;
      } else {
        values.push_back(d);
      }
    }
    drawn += batch;
  }
  out.pairs = values.size();
  if (values.empty()) return out;
  double sum = 0.0;
  for (const auto v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  out.q10 = quantile(values, 0.1);
  out.q50 = quantile(values, 0.5);
  out.q90 = quantile(values, 0.9);
  return out;
}

std::uint32_t kernel_max_distance(const CoreView& view) {
  if (view.kernel.size() < 2) {
    throw StructureError("kernel_max_distance: fewer than 2 kernel vertices");
  }
  std::uint32_t best = 0;
  for (const Vertex source : view.kernel) {
    const auto dist = bfs_distances(view.core, source);
    for (const Vertex t : view.kernel) {
      if (dist[t] != kUnreachable) best = std::max(best, dist[t]);
    }
  }
  return best;
}

double isoperimetric_number(const Multigraph& k) {
  const std::size_t n = k.num_vertices();
  if (n > kIsoperimetricMaxVertices) {
    throw SizeError("isoperimetric_number: " + std::to_string(n) +
                    " vertices exceeds the exact limit of 22");
  }
  std::array<std::array<std::int64_t, kIsoperimetricMaxVertices>,
             kIsoperimetricMaxVertices>
      mult{};
  std::array<std::int64_t, kIsoperimetricMaxVertices> volume{};
  std::array<std::int64_t, kIsoperimetricMaxVertices> outward{};  // non-loop degree
  std::int64_t total = 0;
  for (const Edge& e : k.edges()) {
    if (e.is_loop()) {
      volume[e.u] += e.special ? 1 : 2;
      total += e.special ? 1 : 2;
      continue;
    }
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
    ++volume[e.u];
    ++volume[e.v];
    ++outward[e.u];
    ++outward[e.v];
    total += 2;
  }
  // Exact rational minimum best_num / best_den.
  std::int64_t best_num = 1;
  std::int64_t best_den = 0;
  std::uint32_t set = 0;
  std::int64_t vol = 0;
  std::int64_t boundary = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<std::size_t>(std::countr_zero(i));
    std::int64_t into = 0;
    for (std::uint32_t rest = set & ~(1u << v); rest != 0; rest &= rest - 1) {
      into += mult[v][static_cast<std::size_t>(std::countr_zero(rest))];
    }
    if (set & (1u << v)) {
      set &= ~(1u << v);
      vol -= volume[v];
      boundary -= outward[v] - 2 * into;
    } else {
      set |= 1u << v;
      vol += volume[v];
      boundary += outward[v] - 2 * into;
    }
    if (vol <= 0 || 2 * vol > total) continue;
    if (best_den == 0 || boundary * best_den < best_num * vol) {
      best_num = boundary;
      best_den = vol;
    }
  }
  if (best_den == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(best_num) / static_cast<double>(best_den);
}

MixingResult mixing_time_exact(const Multigraph& g, Rng& rng, double tv_threshold,
                               std::uint64_t max_steps) {
  const std::size_t n = g.num_vertices();
  if (n > kMixingMaxVertices) {
    throw SizeError("mixing_time_exact: " + std::to_string(n) +
                    " vertices exceeds the limit of 5000");
  }
  require_connected(g, "mixing_time_exact");
  if (!(tv_threshold > 0.0)) throw DomainError("tv threshold must be positive");

  MixingResult out;
  std::vector<Vertex> starts;
  if (n <= kMixingAllStartsMaxVertices) {
    for (Vertex v = 0; v < n; ++v) starts.push_back(v);
  } else {
    out.estimate = true;
    const Sweep first = sweep(g, 0);
    const Sweep second = sweep(g, first.farthest);
    starts.push_back(first.farthest);
    starts.push_back(second.farthest);
    for (int i = 0; i < 16; ++i) starts.push_back(static_cast<Vertex>(rng.below(n)));
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  }
  out.starts = starts.size();

  const double volume = static_cast<double>(g.degree_sum());
  std::vector<double> pi(n);
  std::vector<double> inv_degree(n);
  for (Vertex v = 0; v < n; ++v) {
    const double deg = static_cast<double>(g.degree(v));
    pi[v] = deg / volume;
    inv_degree[v] = deg > 0 ? 0.5 / deg : 0.0;
  }
  auto tv = [&](const std::vector<double>& x) {
    double sum = 0.0;
    for (Vertex v = 0; v < n; ++v) sum += std::fabs(x[v] - pi[v]);
    return 0.5 * sum;
  };

  std::vector<double> x(n);
  std::vector<double> y(n);
  for (const Vertex s : starts) {
    std::fill(x.begin(), x.end(), 0.0);
    x[s] = 1.0;
    std::uint64_t t = 0;
    // TV from a fixed start is non-increasing in t, so the first crossing is
    // the mixing time for that start.
    while (tv(x) > tv_threshold) {
      if (++t > max_steps) throw ResourceError("mixing_time_exact: step cap exceeded");
      for (Vertex v = 0; v < n; ++v) y[v] = 0.5 * x[v];
      for (Vertex v = 0; v < n; ++v) {
        if (x[v] == 0.0) continue;
        const double share = x[v] * inv_degree[v];
        for (const auto& slot : g.incident(v)) y[slot.neighbor] += share;
      }
      x.swap(y);
    }
    out.time = std::max(out.time, t);
  }
  return out;
}

CycleCensus cycle_census(const CoreDecomposition& d) {
  return {d.stripped_cycle_lengths.size(), d.stripped_cycle_vertices()};
}

namespace {

constexpr std::string_view kMetricNames[] = {
    "component_size",
    "core_size",
    "core_degree_two",
    "stripped_cycle_count",
    "stripped_cycle_vertex_count",
    "kernel_vertices",
    "kernel_edges",
    "max_two_path",
    "diameter",
    "typical_kernel_distance_mean",
    "kernel_max_distance",
    "isoperimetric_number",
    "mixing_time",
    "bush_size_max",
};

template <class T>
std::optional<double> as_double(const std::optional<T>& v) {
  if (!v) return std::nullopt;
  return static_cast<double>(*v);
}

std::string format_optional(std::optional<double> v) {
  if (!v) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

}  // namespace

std::span<const std::string_view> metric_names() { return kMetricNames; }

bool is_metric_name(std::string_view name) {
  return std::find(std::begin(kMetricNames), std::end(kMetricNames), name) !=
         std::end(kMetricNames);
}

std::optional<double> metric_value(const ObservableRecord& r, std::string_view name) {
  auto d = [](std::size_t v) { return std::optional<double>(static_cast<double>(v)); };
  if (name == "component_size") return d(r.component_size);
  if (name == "core_size") return d(r.core_size);
  if (name == "core_degree_two") return d(r.core_degree_two);
  if (name == "stripped_cycle_count") return d(r.stripped_cycle_count);
  if (name == "stripped_cycle_vertex_count") return d(r.stripped_cycle_vertex_count);
  if (name == "kernel_vertices") return d(r.kernel_vertices);
  if (name == "kernel_edges") return d(r.kernel_edges);
  if (name == "max_two_path") return d(r.max_two_path);
  if (name == "diameter") return as_double(r.diameter);
  if (name == "typical_kernel_distance_mean") return r.typical_kernel_distance_mean;
  if (name == "kernel_max_distance") return as_double(r.kernel_max_distance);
  if (name == "isoperimetric_number") return r.isoperimetric_number;
  if (name == "mixing_time") return as_double(r.mixing_time);
  if (name == "bush_size_max") return d(r.bush_size_max);
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

ObserveOptions ObserveOptions::for_metrics(std::span<const std::string> metrics) {
  ObserveOptions o;
  for (const auto& m : metrics) {
    if (!is_metric_name(m)) throw ConfigError("unknown metric '" + m + "'");
    if (m == "diameter") o.diameter = true;
    if (m == "typical_kernel_distance_mean") o.typical_distance = true;
    if (m == "kernel_max_distance") o.kernel_max_distance = true;
    if (m == "isoperimetric_number") o.isoperimetric = true;
    if (m == "mixing_time") o.mixing = true;
  }
  return o;
}

ObservableRecord observe(const Multigraph& g, const CoreDecomposition& d,
                         const ObserveOptions& options, Rng& rng) {
  ObservableRecord r;
  r.component_size = g.num_vertices();
  r.core_size = d.core_vertices.size();
  r.core_degree_two = d.core_degree_two;
  const CycleCensus census = cycle_census(d);
  r.stripped_cycle_count = census.count;
  r.stripped_cycle_vertex_count = census.vertices;
  r.kernel_vertices = d.kernel.num_vertices();
  r.kernel_edges = d.kernel.num_edges();
  r.max_two_path = d.path_lengths.empty() ? 0 : max_two_path(d);
  for (const auto& tree : d.bushes) r.bush_size_max = std::max(r.bush_size_max, tree.size());

  const bool distances = options.diameter || options.typical_distance ||
                         options.kernel_max_distance || options.mixing;
  if (!distances && !options.isoperimetric) return r;

  // Distance metrics live on the largest component.
  const Multigraph* h = &g;
  const CoreDecomposition* hd = &d;
  Multigraph sub;
  CoreDecomposition sub_d;
  if (distances && g.num_vertices() > 0 && !is_connected(g)) {
    sub = induced_subgraph(g, largest_component(g));
    sub_d = decompose(sub);
    h = &sub;
    hd = &sub_d;
  }

  if (options.diameter && h->num_vertices() > 0) {
    const DiameterResult res = diameter(*h, options.diameter_mode);
    r.diameter = res.value;
    r.diameter_lower_bound = !res.exact;
  }
  if ((options.typical_distance || options.kernel_max_distance) &&
      hd->kernel.num_vertices() >= 2) {
    const CoreView view = core_view(*h, *hd);
    if (options.typical_distance) {
      r.typical_kernel_distance_mean =
          typical_kernel_distance(view, rng, options.distance_pairs).mean;
    }
    if (options.kernel_max_distance) r.kernel_max_distance = kernel_max_distance(view);
  }
  if (options.isoperimetric && d.kernel.num_vertices() > 0 &&
      d.kernel.num_vertices() <= kIsoperimetricMaxVertices) {
    r.isoperimetric_number = isoperimetric_number(d.kernel);
  }
  if (options.mixing && h->num_vertices() > 0 &&
      h->num_vertices() <= kMixingMaxVertices) {
    const MixingResult res = mixing_time_exact(*h, rng, options.mixing_threshold);
    r.mixing_time = res.time;
    r.mixing_time_estimate = res.estimate;
  }
  return r;
}

nlohmann::ordered_json to_json(const ObservableRecord& r) {
  nlohmann::ordered_json j;
  auto opt = [](const auto& v) -> nlohmann::ordered_json {
    if (!v) return nullptr;
    return *v;
  };
  j["component_size"] = r.component_size;
  j["core_size"] = r.core_size;
  j["core_degree_two"] = r.core_degree_two;
  j["stripped_cycle_count"] = r.stripped_cycle_count;
  j["stripped_cycle_vertex_count"] = r.stripped_cycle_vertex_count;
  j["kernel_vertices"] = r.kernel_vertices;
  j["kernel_edges"] = r.kernel_edges;
  j["max_two_path"] = r.max_two_path;
  j["diameter"] = opt(r.diameter);
  j["diameter_lower_bound"] = r.diameter_lower_bound;
  j["typical_kernel_distance_mean"] = opt(r.typical_kernel_distance_mean);
  j["kernel_max_distance"] = opt(r.kernel_max_distance);
  j["isoperimetric_number"] = opt(r.isoperimetric_number);
  j["mixing_time"] = opt(r.mixing_time);
  j["mixing_time_estimate"] = r.mixing_time_estimate;
  j["bush_size_max"] = r.bush_size_max;
  return j;
}

std::string csv_header() {
  return "component_size,core_size,core_degree_two,stripped_cycle_count,"
         "stripped_cycle_vertex_count,kernel_vertices,kernel_edges,max_two_path,"
         "diameter,diameter_lower_bound,typical_kernel_distance_mean,"
         "kernel_max_distance,isoperimetric_number,mixing_time,"
         "mixing_time_estimate,bush_size_max";
}

std::string csv_row(const ObservableRecord& r) {
  std::string s;
  auto num = [&s](std::size_t v) { s += std::to_string(v); s += ','; };
  num(r.component_size);
  num(r.core_size);
  num(r.core_degree_two);
  num(r.stripped_cycle_count);
  num(r.stripped_cycle_vertex_count);
  num(r.kernel_vertices);
  num(r.kernel_edges);
  num(r.max_two_path);
  s += format_optional(as_double(r.diameter)) + ',';
  s += r.diameter_lower_bound ? "1," : "0,";
  s += format_optional(r.typical_kernel_distance_mean) + ',';
  s += format_optional(as_double(r.kernel_max_distance)) + ',';
  s += format_optional(r.isoperimetric_number) + ',';
  s += format_optional(as_double(r.mixing_time)) + ',';
  s += r.mixing_time_estimate ? "1," : "0,";
  s += std::to_string(r.bush_size_max);
  return s;
}

}  // namespace giant
