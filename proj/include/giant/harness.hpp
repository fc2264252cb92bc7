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

// Replicated experiments and two-model comparison reports.
//
// Replica i of model X draws from stream (seed, "a:<X>" or "b:<X>", i), so a
// report depends only on the config, never on worker count or scheduling.

#ifndef GIANT_HARNESS_HPP_
#define GIANT_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "giant/analytic.hpp"
#include "giant/models.hpp"
#include "giant/observables.hpp"
#include "giant/stats.hpp"
#include "json.hpp"

namespace giant {

struct ModelSpec {
  ModelKind kind = ModelKind::kGnp;
  std::size_t n = 0;
  std::optional<double> eps;  // exactly one of eps / p
  std::optional<double> p;

  ModelParams resolve() const;
};

struct ExperimentConfig {
  ModelSpec model_a;
  std::optional<ModelSpec> model_b;
  std::size_t replicas = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> metrics;
  bool strict_regime = false;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::size_t distance_pairs = 1000;
  DiameterMode diameter_mode = DiameterMode::kExact;

  // Throws ConfigError (or DomainError from parameter resolution).
  void validate() const;
};

// A replica failed; carries the model slot ("a"/"b") and replica index.
class ReplicaError : public std::runtime_error {
 public:
  ReplicaError(std::string slot, std::size_t index, const std::string& what)
      : std::runtime_error("model " + slot + ", replica " + std::to_string(index) +
                           ": " + what),
        slot_(std::move(slot)),
        index_(index) {}
  const std::string& slot() const { return slot_; }
  std::size_t index() const { return index_; }

 private:
  std::string slot_;
  std::size_t index_;
};

struct ReplicaRecord {
  std::size_t index = 0;
  ObservableRecord obs;
  bool event_b = true;  // |C1| in [eps n, 4 eps n]; always true for non-giant models
  bool excluded = false;
  std::vector<std::string> warnings;
  double wall_ms = 0.0;
};

struct ModelRun {
  ModelSpec spec;
  ModelParams params;
  std::vector<ReplicaRecord> records;  // ordered by replica index
  std::size_t excluded = 0;

  // Values of `metric` over non-excluded replicas that carry it.
  std::vector<double> values(const std::string& metric) const;
};

struct ExperimentReport {
  ExperimentConfig config;
  ModelRun a;
  std::optional<ModelRun> b;
  std::map<std::string, Summary> summary_a;
  std::map<std::string, Summary> summary_b;
  std::map<std::string, KsResult> tests;
  double total_wall_ms = 0.0;
};

// Stream tag of a slot: "a:gnp", "b:c1_general", ...
std::string stream_tag(const std::string& slot, ModelKind kind);

// One replica: sample, restrict gnp / poisson_cloning to the largest
// component, decompose, observe.
ReplicaRecord run_replica(const ModelSpec& spec, const ModelParams& params,
                          const std::string& slot, std::size_t index,
                          std::uint64_t seed, const ObserveOptions& options);

// Throws ConfigError on an invalid config and ReplicaError on the failing
// replica with the smallest (slot, index).
ExperimentReport run_experiment(const ExperimentConfig& config);

inline constexpr int kReportVersion = 1;

nlohmann::ordered_json config_to_json(const ExperimentConfig& config);
nlohmann::ordered_json params_to_json(const ModelParams& params);
// Timing fields appear only under "timing" and in per-record "wall_ms" when
// `include_timing` is set.
nlohmann::ordered_json report_to_json(const ExperimentReport& report,
                                      bool include_timing = true);
// One row per replica per model; columns: model,slot,replica,event_b,excluded,
// then the observable columns.
void write_report_csv(const ExperimentReport& report, std::ostream& out);

}  // namespace giant

#endif  // GIANT_HARNESS_HPP_
