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

#include "giant/harness.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>
#include <utility>

#include "giant/decompose.hpp"
#include "giant/errors.hpp"

namespace giant {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool analyzes_giant(ModelKind kind) {
  return kind == ModelKind::kGnp || kind == ModelKind::kPoissonCloning;
}

nlohmann::ordered_json spec_to_json(const ModelSpec& spec) {
  nlohmann::ordered_json j;
  j["model"] = std::string(to_string(spec.kind));
  j["n"] = spec.n;
  j["eps"] = spec.eps ? nlohmann::ordered_json(*spec.eps) : nullptr;
  j["p"] = spec.p ? nlohmann::ordered_json(*spec.p) : nullptr;
  return j;
}

nlohmann::ordered_json summary_to_json(const Summary& s) {
  nlohmann::ordered_json j;
  j["count"] = s.count;
  j["mean"] = s.mean;
  j["sd"] = s.sd;
  j["min"] = s.min;
  j["max"] = s.max;
  j["q10"] = s.q10;
  j["q25"] = s.q25;
  j["q50"] = s.q50;
  j["q75"] = s.q75;
  j["q90"] = s.q90;
  return j;
}

nlohmann::ordered_json run_to_json(const ModelRun& run,
                                   const std::map<std::string, Summary>& summary,
                                   bool include_timing) {
  nlohmann::ordered_json j;
  j["spec"] = spec_to_json(run.spec);
  j["params"] = params_to_json(run.params);
  auto records = nlohmann::ordered_json::array();
  for (const ReplicaRecord& rec : run.records) {
    nlohmann::ordered_json r;
    r["replica"] = rec.index;
    r["event_b"] = rec.event_b;
    r["excluded"] = rec.excluded;
    r["warnings"] = rec.warnings;
    r["observables"] = to_json(rec.obs);
    if (include_timing) r["wall_ms"] = rec.wall_ms;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [metric, value] : summary) s[metric] = summary_to_json(value);
  j["summary"] = std::move(s);
  return j;
}

}  // namespace

ModelParams ModelSpec::resolve() const {
  if (eps.has_value() == p.has_value()) {
    throw ConfigError("exactly one of eps and p must be given");
  }
  return eps ? ModelParams::from_eps(n, *eps) : ModelParams::from_p(n, *p);
}

void ExperimentConfig::validate() const {
  if (replicas == 0) throw ConfigError("replicas must be at least 1");
  if (metrics.empty()) throw ConfigError("at least one metric is required");
  for (const auto& m : metrics) {
    if (!is_metric_name(m)) throw ConfigError("unknown metric '" + m + "'");
  }
  const ModelParams pa = model_a.resolve();
  if (model_a.kind != ModelKind::kGnp && model_a.kind != ModelKind::kPoissonCloning &&
      !pa.supercritical()) {
    throw ConfigError(std::string(to_string(model_a.kind)) + " needs eps > 0");
  }
  if (model_b) {
    const ModelParams pb = model_b->resolve();
    if (model_b->kind != ModelKind::kGnp &&
        model_b->kind != ModelKind::kPoissonCloning && !pb.supercritical()) {
      throw ConfigError(std::string(to_string(model_b->kind)) + " needs eps > 0");
    }
  }
}

std::vector<double> ModelRun::values(const std::string& metric) const {
  std::vector<double> out;
  for (const ReplicaRecord& rec : records) {
    if (rec.excluded) continue;
    if (const auto v = metric_value(rec.obs, metric)) out.push_back(*v);
  }
  return out;
}

std::string stream_tag(const std::string& slot, ModelKind kind) {
  return slot + ":" + std::string(to_string(kind));
}

ReplicaRecord run_replica(const ModelSpec& spec, const ModelParams& params,
                          const std::string& slot, std::size_t index,
                          std::uint64_t seed, const ObserveOptions& options) {
  const auto start = Clock::now();
  Rng rng = derive_stream(seed, stream_tag(slot, spec.kind), index);
  ModelSample sample = sample_model(spec.kind, params, rng);
  ReplicaRecord rec;
  rec.index = index;
  rec.warnings = sample.info.warnings;
  Multigraph analyzed;
  if (analyzes_giant(spec.kind)) {
    analyzed = induced_subgraph(sample.graph, largest_component(sample.graph));
    const double size = static_cast<double>(analyzed.num_vertices());
    const double scale = params.eps * static_cast<double>(params.n);
    rec.event_b = size >= scale && size <= 4.0 * scale;
  } else {
    analyzed = std::move(sample.graph);
  }
  const CoreDecomposition d = decompose(analyzed);
  rec.obs = observe(analyzed, d, options, rng);
  rec.wall_ms = elapsed_ms(start);
  return rec;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = Clock::now();
  ExperimentReport report;
  report.config = config;
  report.a.spec = config.model_a;
  report.a.params = config.model_a.resolve();
  report.a.records.resize(config.replicas);
  if (config.model_b) {
    report.b.emplace();
    report.b->spec = *config.model_b;
    report.b->params = config.model_b->resolve();
    report.b->records.resize(config.replicas);
  }
  ObserveOptions options = ObserveOptions::for_metrics(config.metrics);
  options.distance_pairs = config.distance_pairs;
  options.diameter_mode = config.diameter_mode;

  const std::size_t tasks = config.replicas * (config.model_b ? 2 : 1);
  std::vector<std::exception_ptr> errors(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t t = next++; t < tasks; t = next++) {
      const bool is_b = t >= config.replicas;
      const std::size_t index = is_b ? t - config.replicas : t;
      ModelRun& run = is_b ? *report.b : report.a;
      try {
        run.records[index] =
            run_replica(run.spec, run.params, is_b ? "b" : "a", index, config.seed, options);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  unsigned jobs = config.jobs != 0 ? config.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::size_t t = 0; t < tasks; ++t) {
    if (!errors[t]) continue;
    const bool is_b = t >= config.replicas;
    const std::size_t index = is_b ? t - config.replicas : t;
    try {
      std::rethrow_exception(errors[t]);
    } catch (const std::exception& e) {
      throw ReplicaError(is_b ? "b" : "a", index, e.what());
    }
  }

  auto finish = [&](ModelRun& run, std::map<std::string, Summary>& summary) {
    for (ReplicaRecord& rec : run.records) {
      rec.excluded = config.strict_regime && !rec.event_b;
      if (rec.excluded) ++run.excluded;
    }
    for (const auto& metric : config.metrics) {
      const auto values = run.values(metric);
      summary[metric] = summarize(values);
    }
  };
  finish(report.a, report.summary_a);
  if (report.b) {
    finish(*report.b, report.summary_b);
    for (const auto& metric : config.metrics) {
      const auto xs = report.a.values(metric);
      const auto ys = report.b->values(metric);
      if (xs.size() >= 5 && ys.size() >= 5) report.tests[metric] = ks_two_sample(xs, ys);
    }
  }
  report.total_wall_ms = elapsed_ms(start);
  return report;
}

nlohmann::ordered_json params_to_json(const ModelParams& params) {
  nlohmann::ordered_json j;
  j["n"] = params.n;
  j["eps"] = params.eps;
  j["lambda"] = params.lambda;
  j["p"] = params.p;
  j["mu"] = params.mu;
  j["theta"] = params.theta;
  return j;
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& config) {
  nlohmann::ordered_json j;
  j["model_a"] = spec_to_json(config.model_a);
  j["model_b"] = config.model_b ? spec_to_json(*config.model_b) : nullptr;
  j["replicas"] = config.replicas;
  j["seed"] = config.seed;
  j["metrics"] = config.metrics;
  j["strict_regime"] = config.strict_regime;
  j["distance_pairs"] = config.distance_pairs;
  j["diameter_mode"] = config.diameter_mode == DiameterMode::kExact        ? "exact"
                       : config.diameter_mode == DiameterMode::kAllSources ? "all_sources"
                                                                           : "double_sweep";
  return j;
}

nlohmann::ordered_json report_to_json(const ExperimentReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["config"] = config_to_json(report.config);
  j["model_a"] = run_to_json(report.a, report.summary_a, include_timing);
  if (report.b) {
    j["model_b"] = run_to_json(*report.b, report.summary_b, include_timing);
    nlohmann::ordered_json tests = nlohmann::ordered_json::object();
    for (const auto& [metric, ks] : report.tests) {
      tests[metric] = {{"D", ks.D}, {"p", ks.p}, {"approx_ties", ks.approx_ties}};
    }
    j["tests"] = std::move(tests);
    j["tests_note"] =
        "cross-model tolerances are calibration choices; contiguity is asymptotic";
  }
  j["excluded"] = {{"a", report.a.excluded}, {"b", report.b ? report.b->excluded : 0}};
  if (include_timing) {
    nlohmann::ordered_json timing;
    timing["total_ms"] = report.total_wall_ms;
    auto per = [](const ModelRun& run) {
      std::vector<double> ms;
      for (const auto& rec : run.records) ms.push_back(rec.wall_ms);
      return ms;
    };
    timing["replica_ms_a"] = per(report.a);
    if (report.b) timing["replica_ms_b"] = per(*report.b);
    j["timing"] = std::move(timing);
  }
  return j;
}

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
  out << "model,slot,replica,event_b,excluded," << csv_header() << '\n';
  auto rows = [&out](const ModelRun& run, const char* slot) {
    for (const ReplicaRecord& rec : run.records) {
      out << to_string(run.spec.kind) << ',' << slot << ',' << rec.index << ','
          << (rec.event_b ? 1 : 0) << ',' << (rec.excluded ? 1 : 0) << ','
          << csv_row(rec.obs) << '\n';
    }
  };
  rows(report.a, "a");
  if (report.b) rows(*report.b, "b");
}

}  // namespace giant
