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

#ifndef GIANT_OBSERVABLES_HPP_
#define GIANT_OBSERVABLES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "giant/decompose.hpp"
#include "giant/multigraph.hpp"
#include "giant/random.hpp"
#include "json.hpp"

namespace giant {

// Longest recorded 2-path. Throws StructureError on an edgeless kernel.
std::size_t max_two_path(const CoreDecomposition& d);

enum class DiameterMode {
  kExact,        // eccentricity-bound pruning; same answer as kAllSources
  kAllSources,   // one BFS per vertex
  kDoubleSweep,  // two BFS runs; a lower bound
};

struct DiameterResult {
  std::uint32_t value = 0;
  bool exact = true;
  std::size_t bfs_runs = 0;
};

// Throws StructureError on an empty or disconnected graph.
DiameterResult diameter(const Multigraph& g, DiameterMode mode = DiameterMode::kExact);

// The 2-core as its own graph plus the positions of the kernel vertices in it.
struct CoreView {
  Multigraph core;
  std::vector<Vertex> kernel;  // ids in `core`
};

CoreView core_view(const Multigraph& g, const CoreDecomposition& d);

struct DistanceSample {
  double mean = 0.0;
  double q10 = 0.0;
  double q50 = 0.0;
  double q90 = 0.0;
  std::size_t pairs = 0;        // reachable pairs measured
  std::size_t unreachable = 0;  // sampled pairs in different components
};

// Distances between uniform pairs of distinct kernel vertices, measured in
// the 2-core. Sources are drawn uniformly and each BFS serves up to
// `targets_per_source` uniform targets. Throws StructureError when the
// kernel has fewer than 2 vertices.
DistanceSample typical_kernel_distance(const CoreView& view, Rng& rng,
                                       std::size_t pairs,
                                       std::size_t targets_per_source = 16);

// Max 2-core distance over reachable kernel-vertex pairs, one BFS per kernel
// vertex. Throws StructureError when the kernel has fewer than 2 vertices.
std::uint32_t kernel_max_distance(const CoreView& view);

inline constexpr std::size_t kIsoperimetricMaxVertices = 22;

// min e(S, S^c) / d(S) over non-empty S with 2 d(S) <= d(V) and d(S) > 0.
// Loops add volume and never boundary. Exhaustive Gray-code walk; throws
// SizeError above 22 vertices. Infinity when no subset is admissible.
double isoperimetric_number(const Multigraph& k);

inline constexpr std::size_t kMixingMaxVertices = 5000;
inline constexpr std::size_t kMixingAllStartsMaxVertices = 500;

struct MixingResult {
  std::uint64_t time = 0;
  bool estimate = false;  // worst start was subsampled: a lower bound
  std::size_t starts = 0;
};

// Smallest t with max over starts of TV(P^t(s, .), pi) <= threshold for the
// lazy walk (hold 1/2, else move along a uniform incident slot). Larger
// graphs use the double-sweep endpoints plus 16 uniform starts. Throws
// SizeError above 5000 vertices and StructureError when disconnected.
MixingResult mixing_time_exact(const Multigraph& g, Rng& rng,
                               double tv_threshold = 0.25,
                               std::uint64_t max_steps = 10'000'000);

struct CycleCensus {
  std::size_t count = 0;
  std::size_t vertices = 0;
};

CycleCensus cycle_census(const CoreDecomposition& d);

struct ObservableRecord {
  std::size_t component_size = 0;
  std::size_t core_size = 0;
  std::size_t core_degree_two = 0;
  std::size_t stripped_cycle_count = 0;
  std::size_t stripped_cycle_vertex_count = 0;
  std::size_t kernel_vertices = 0;
  std::size_t kernel_edges = 0;
  std::size_t max_two_path = 0;
  std::optional<std::uint32_t> diameter;
  bool diameter_lower_bound = false;
  std::optional<double> typical_kernel_distance_mean;
  std::optional<std::uint32_t> kernel_max_distance;
  std::optional<double> isoperimetric_number;
  std::optional<std::uint64_t> mixing_time;
  bool mixing_time_estimate = false;
  std::size_t bush_size_max = 0;
};

// Metric names accepted by the harness, in record field order.
std::span<const std::string_view> metric_names();
bool is_metric_name(std::string_view name);
// Metric value as a number; nullopt when the record does not carry it.
std::optional<double> metric_value(const ObservableRecord& r, std::string_view name);

struct ObserveOptions {
  bool diameter = false;
  DiameterMode diameter_mode = DiameterMode::kExact;
  bool typical_distance = false;
  std::size_t distance_pairs = 1000;
  bool kernel_max_distance = false;
  bool isoperimetric = false;  // only attempted for kernels <= 22 vertices
  bool mixing = false;         // only attempted for graphs <= 5000 vertices
  double mixing_threshold = 0.25;

  // Enables exactly what the listed metrics need.
  static ObserveOptions for_metrics(std::span<const std::string> metrics);
};

// Structural counts come from `d`, the decomposition of `g`. Distance and
// mixing metrics are measured on the largest component of `g`.
ObservableRecord observe(const Multigraph& g, const CoreDecomposition& d,
                         const ObserveOptions& options, Rng& rng);

nlohmann::ordered_json to_json(const ObservableRecord& r);
// Comma-separated field names in record order.
std::string csv_header();
std::string csv_row(const ObservableRecord& r);

}  // namespace giant

#endif  // GIANT_OBSERVABLES_HPP_
