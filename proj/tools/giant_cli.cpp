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

// Command-line front end.
//
// Exit codes: 0 ok, 1 selftest failure, 2 configuration error, 3 parse error,
// 4 runtime error.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "giant/analytic.hpp"
#include "giant/cola.hpp"
#include "giant/decompose.hpp"
#include "giant/errors.hpp"
#include "giant/harness.hpp"
#include "giant/models.hpp"
#include "giant/multigraph.hpp"
#include "giant/observables.hpp"
#include "giant/selftest.hpp"
#include "giant/stats.hpp"
#include "json.hpp"

namespace {

using giant::ConfigError;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kSelftestFailed = 1, kConfig = 2, kParse = 3, kRuntime = 4 };

struct Globals {
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format = "json";
  unsigned jobs = 0;
};

// Output sink: a file or standard output for "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

giant::Multigraph read_graph(const std::string& path) {
  if (path == "-") return giant::read_edge_list(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open input file '" + path + "'");
  return giant::read_edge_list(in);
}

giant::ModelSpec make_spec(const std::string& model, std::size_t n,
                           std::optional<double> eps, std::optional<double> p) {
  giant::ModelSpec spec;
  spec.kind = giant::parse_model_kind(model);
  spec.n = n;
  spec.eps = eps;
  spec.p = p;
  if (eps.has_value() == p.has_value()) {
    throw ConfigError("give exactly one of --eps and --p");
  }
  return spec;
}

void emit_json(const json& j, const Globals& g) {
  Sink sink(g.out);
  sink.stream() << j.dump(2) << '\n';
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string model;
  std::size_t n = 0;
  std::optional<double> eps;
  std::optional<double> p;
};

int run_gen(const GenArgs& a, const Globals& g) {
  const giant::ModelSpec spec = make_spec(a.model, a.n, a.eps, a.p);
  const giant::ModelParams params = spec.resolve();
  giant::Rng rng = giant::derive_stream(g.seed, "gen:" + a.model, 0);
  const giant::ModelSample sample = giant::sample_model(spec.kind, params, rng);
  // The edge-list format has no comment syntax; the resolved config goes to
  // the error stream.
  json echo;
  echo["command"] = "gen";
  echo["model"] = a.model;
  echo["seed"] = g.seed;
  echo["params"] = giant::params_to_json(params);
  echo["Lambda"] = sample.info.Lambda;
  echo["warnings"] = sample.info.warnings;
  std::cerr << echo.dump() << '\n';
  Sink sink(g.out);
  giant::write_edge_list(sample.graph, sink.stream());
  return kOk;
}

// --- decompose -----------------------------------------------------------

int run_decompose(const std::string& input, const Globals& g) {
  const giant::Multigraph graph = read_graph(input);
  const giant::Multigraph giant_component =
      giant::induced_subgraph(graph, giant::largest_component(graph));
  const giant::CoreDecomposition d = giant::decompose(giant_component);
  if (g.format == "csv") {
    Sink sink(g.out);
    auto& out = sink.stream();
    out << "input,component_size,core_size,stripped_cycle_count,"
           "stripped_cycle_vertices,kernel_vertices,kernel_edges,max_two_path,"
           "bush_size_max\n";
    std::size_t bush_max = 0;
    for (const auto& t : d.bushes) bush_max = std::max(bush_max, t.size());
    out << input << ',' << giant_component.num_vertices() << ','
        << d.core_vertices.size() << ',' << d.stripped_cycle_lengths.size() << ','
        << d.stripped_cycle_vertices() << ',' << d.kernel.num_vertices() << ','
        << d.kernel.num_edges() << ','
        << (d.path_lengths.empty() ? 0 : giant::max_two_path(d)) << ',' << bush_max
        << '\n';
    return kOk;
  }
  json j;
  j["config"] = {{"command", "decompose"}, {"input", input}, {"analyzed", "largest_component"}};
  j["component_size"] = giant_component.num_vertices();
  j["decomposition"] = giant::decomposition_summary(d);
  emit_json(j, g);
  return kOk;
}

// --- cola ------------------------------------------------------------------

struct ColaArgs {
  std::size_t n = 0;
  double lambda = 0.0;
  std::optional<double> beta;
  std::size_t replicas = 1;
  std::string trace;
};

int run_cola_cmd(const ColaArgs& a, const Globals& g) {
  if (a.n == 0) throw ConfigError("--n must be positive");
  if (!(a.lambda >= 0.0) || !std::isfinite(a.lambda)) {
    throw ConfigError("--lambda must be non-negative");
  }
  if (a.replicas == 0) throw ConfigError("--replicas must be positive");
  const double beta = a.beta.value_or(giant::default_beta(a.lambda));
  if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("--beta must lie in (0, 1)");

  std::vector<double> values;
  std::vector<std::size_t> phases;
  for (std::size_t r = 0; r < a.replicas; ++r) {
    giant::Rng cell_rng = giant::derive_stream(g.seed, "cola:cell", r);
    giant::Rng run_rng = giant::derive_stream(g.seed, "cola:run", r);
    const giant::LambdaCell cell = giant::generate_cell(a.n, a.lambda, cell_rng);
    const giant::ColaResult res =
        giant::run_cola(cell, beta, a.trace.empty() || r != 0, run_rng);
    values.push_back(res.lambda_c);
    phases.push_back(res.lambda_c_phase);
    if (r == 0 && !a.trace.empty()) {
      std::ofstream trace(a.trace, std::ios::binary);
      if (!trace) throw ConfigError("cannot open trace file '" + a.trace + "'");
      giant::write_trace_csv(res.trace, trace);
    }
  }
  const giant::Summary s = giant::summarize(values);
  if (g.format == "csv") {
    Sink sink(g.out);
    sink.stream() << "replica,n,lambda,beta,seed,lambda_c,lambda_c_phase\n";
    for (std::size_t r = 0; r < values.size(); ++r) {
      sink.stream() << r << ',' << a.n << ',' << fmt(a.lambda) << ',' << fmt(beta) << ','
                    << g.seed << ',' << fmt(values[r]) << ',' << phases[r] << '\n';
    }
    return kOk;
  }
  json j;
  j["config"] = {{"command", "cola"}, {"n", a.n},          {"lambda", a.lambda},
                 {"beta", beta},      {"replicas", a.replicas}, {"seed", g.seed}};
  if (a.lambda > 1.0) {
    const double theta = giant::theta_lambda(a.lambda);
    j["theta_lambda"] = theta;
    j["expected_lambda_c"] = theta * a.lambda;
    j["predicted_sd"] = 1.0 / std::sqrt(theta * static_cast<double>(a.n));
  }
  j["lambda_c"] = values;
  j["summary"] = {{"mean", s.mean}, {"sd", s.sd},   {"min", s.min},
                  {"max", s.max},   {"se", s.count > 0 ? s.sd / std::sqrt(double(s.count)) : 0.0}};
  emit_json(j, g);
  return kOk;
}

// --- observe -------------------------------------------------------------

int run_observe(const std::string& input, const std::vector<std::string>& metrics,
                std::size_t pairs, const Globals& g) {
  const giant::Multigraph graph = read_graph(input);
  const giant::Multigraph comp =
      giant::induced_subgraph(graph, giant::largest_component(graph));
  const giant::CoreDecomposition d = giant::decompose(comp);
  giant::ObserveOptions options = giant::ObserveOptions::for_metrics(metrics);
  options.distance_pairs = pairs;
  giant::Rng rng = giant::derive_stream(g.seed, "observe", 0);
  const giant::ObservableRecord rec = giant::observe(comp, d, options, rng);
  if (g.format == "csv") {
    Sink sink(g.out);
    sink.stream() << "input,seed," << giant::csv_header() << '\n'
                  << input << ',' << g.seed << ',' << giant::csv_row(rec) << '\n';
    return kOk;
  }
  json j;
  j["config"] = {{"command", "observe"}, {"input", input}, {"seed", g.seed},
                 {"metrics", metrics}, {"pairs", pairs}};
  j["observables"] = giant::to_json(rec);
  emit_json(j, g);
  return kOk;
}

// --- compare -------------------------------------------------------------

struct CompareArgs {
  std::string model_a;
  std::string model_b;
  std::size_t n = 0;
  std::optional<double> eps;
  std::optional<double> p;
  std::size_t replicas = 1;
  std::string metrics;
  bool strict = false;
  std::size_t pairs = 1000;
  std::string diameter_mode = "exact";
  bool no_timing = false;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_compare(const CompareArgs& a, const Globals& g) {
  giant::ExperimentConfig config;
  config.model_a = make_spec(a.model_a, a.n, a.eps, a.p);
  if (!a.model_b.empty()) config.model_b = make_spec(a.model_b, a.n, a.eps, a.p);
  config.replicas = a.replicas;
  config.seed = g.seed;
  config.metrics = split_csv(a.metrics);
  config.strict_regime = a.strict;
  config.jobs = g.jobs;
  config.distance_pairs = a.pairs;
  if (a.diameter_mode == "exact") {
    config.diameter_mode = giant::DiameterMode::kExact;
  } else if (a.diameter_mode == "all_sources") {
    config.diameter_mode = giant::DiameterMode::kAllSources;
  } else if (a.diameter_mode == "double_sweep") {
    config.diameter_mode = giant::DiameterMode::kDoubleSweep;
  } else {
    throw ConfigError("unknown diameter mode '" + a.diameter_mode + "'");
  }
  config.validate();
  const giant::ExperimentReport report = giant::run_experiment(config);
  Sink sink(g.out);
  if (g.format == "csv") {
    giant::write_report_csv(report, sink.stream());
  } else {
    sink.stream() << giant::report_to_json(report, !a.no_timing).dump(2) << '\n';
  }
  return kOk;
}

// --- selftest ------------------------------------------------------------

int run_selftest_cmd(const std::string& fault, const Globals& g) {
  giant::SelftestReport report;
  if (fault.empty()) {
    report = giant::run_selftest(g.seed);
  } else if (fault == "peel") {
    report = giant::run_selftest(g.seed, giant::single_pass_peel);
  } else {
    throw ConfigError("unknown fault '" + fault + "'");
  }
  Sink sink(g.out);
  giant::print_selftest(report, sink.stream());
  return report.all_passed() ? kOk : kSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supercritical random graph structure toolkit", "giant"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  if (const char* env = std::getenv("GIANT_SEED")) {
    try {
      globals.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: GIANT_SEED must be an unsigned integer\n";
      return kConfig;
    }
  }
  app.add_option("--seed", globals.seed, "Base seed (default 0, or $GIANT_SEED)");
  app.add_option("--out", globals.out, "Output path, '-' for standard output");
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", globals.jobs, "Worker cap (0: machine parallelism)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample a graph and write an edge list");
  gen_cmd->add_option("--model", gen.model, "Model name")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  auto* gen_eps = gen_cmd->add_option("--eps", gen.eps, "Supercriticality eps");
  auto* gen_p = gen_cmd->add_option("--p", gen.p, "Edge probability");
  gen_eps->excludes(gen_p);

  std::string decompose_in = "-";
  auto* dec_cmd = app.add_subcommand("decompose", "Decompose the largest component");
  dec_cmd->add_option("--in", decompose_in, "Edge-list path, '-' for standard input");

  ColaArgs cola;
  auto* cola_cmd = app.add_subcommand("cola", "Run the cut-off line procedure");
  cola_cmd->add_option("--n", cola.n, "Vertex count")->required();
  cola_cmd->add_option("--lambda", cola.lambda, "Clone rate")->required();
  cola_cmd->add_option("--beta", cola.beta, "Phase ratio (default (1-theta)/3)");
  cola_cmd->add_option("--replicas", cola.replicas, "Number of cells");
  cola_cmd->add_option("--trace", cola.trace, "Write the phase trace of replica 0 here");

  std::string observe_in = "-";
  std::string observe_metrics;
  std::size_t observe_pairs = 1000;
  auto* obs_cmd = app.add_subcommand("observe", "Measure observables of an edge list");
  obs_cmd->add_option("--in", observe_in, "Edge-list path, '-' for standard input");
  obs_cmd->add_option("--metrics", observe_metrics, "Comma-separated metric names");
  obs_cmd->add_option("--pairs", observe_pairs, "Sampled kernel pairs");

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Replicated two-model comparison");
  cmp_cmd->add_option("--model-a", cmp.model_a, "First model")->required();
  cmp_cmd->add_option("--model-b", cmp.model_b, "Second model");
  cmp_cmd->add_option("--n", cmp.n, "Vertex count")->required();
  auto* cmp_eps = cmp_cmd->add_option("--eps", cmp.eps, "Supercriticality eps");
  auto* cmp_p = cmp_cmd->add_option("--p", cmp.p, "Edge probability");
  cmp_eps->excludes(cmp_p);
  cmp_cmd->add_option("--replicas", cmp.replicas, "Replicas per model");
  cmp_cmd->add_option("--metrics", cmp.metrics, "Comma-separated metric names")->required();
  cmp_cmd->add_flag("--strict-regime", cmp.strict, "Exclude giants outside [eps n, 4 eps n]");
  cmp_cmd->add_option("--pairs", cmp.pairs, "Sampled kernel pairs per replica");
  cmp_cmd->add_option("--diameter-mode", cmp.diameter_mode,
                      "exact | all_sources | double_sweep");
  cmp_cmd->add_flag("--no-timing", cmp.no_timing, "Omit wall-clock fields");

  std::string fault;
  auto* self_cmd = app.add_subcommand("selftest", "Run the exhaustive-oracle suites");
  self_cmd->add_option("--inject-fault", fault)->group("");  // mutation demo

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*gen_cmd) return run_gen(gen, globals);
    if (*dec_cmd) return run_decompose(decompose_in, globals);
    if (*cola_cmd) return run_cola_cmd(cola, globals);
    if (*obs_cmd) return run_observe(observe_in, split_csv(observe_metrics), observe_pairs, globals);
    if (*cmp_cmd) return run_compare(cmp, globals);
    if (*self_cmd) return run_selftest_cmd(fault, globals);
  } catch (const giant::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const giant::ReplicaError& e) {
    std::cerr << "replica error: " << e.what() << '\n';
    return kRuntime;
  } catch (const giant::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const giant::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kConfig;
}
