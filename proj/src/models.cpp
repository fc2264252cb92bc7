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

#include "giant/models.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "giant/errors.hpp"

namespace giant {
namespace {

struct KindName {
  ModelKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {ModelKind::kGnp, "gnp"},
    {ModelKind::kPoissonCloning, "poisson_cloning"},
    {ModelKind::kPoissonConfiguration, "poisson_configuration"},
    {ModelKind::kPoissonGeometric, "poisson_geometric"},
    {ModelKind::kC1General, "c1_general"},
    {ModelKind::kC1Simple, "c1_simple"},
};

void require_structured(const ModelParams& params, const char* who) {
  if (!params.supercritical() || !(params.mu < 1.0)) {
    throw DomainError(std::string(who) + " needs lambda > 1");
  }
}

double eps3n(const ModelParams& params) {
  return params.eps * params.eps * params.eps * static_cast<double>(params.n);
}

double draw_Lambda(const ModelParams& params, Rng& rng, SampleInfo& info) {
  const double mean = params.lambda - params.mu;  // 1 + eps - mu
  const double var = 1.0 / (params.eps * static_cast<double>(params.n));
  for (std::uint64_t attempt = 0; attempt <= kLambdaRedrawCap; ++attempt) {
    const double Lambda = sample_normal(mean, var, rng);
    if (Lambda > 0.0) return Lambda;
    ++info.redraws;
  }
  throw ResourceError("Lambda <= 0 after " + std::to_string(kLambdaRedrawCap) +
                      " redraws");
}

// Degrees D_u >= min_degree out of n i.i.d. Po(Lambda) draws, in vertex order.
std::vector<std::uint32_t> draw_kept_degrees(std::size_t n, double Lambda,
                                             std::uint32_t min_degree, Rng& rng) {
  std::vector<std::uint32_t> kept;
  for (std::size_t u = 0; u < n; ++u) {
    const auto d = static_cast<std::uint32_t>(sample_poisson(Lambda, rng));
    if (d >= min_degree) kept.push_back(d);
  }
  return kept;
}

// Matches `degrees`; if the sum is odd a vertex chosen with probability
// proportional to its degree gives up one half-edge and gets a loop.
Multigraph match_with_parity_fix(const std::vector<std::uint32_t>& degrees,
                                 Rng& rng, SampleInfo& info) {
  const std::uint64_t total =
      std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
  if (total % 2 == 0) return configuration_match(degrees, rng);
  std::uint64_t pick = rng.below(total);
  Vertex chosen = 0;
  while (pick >= degrees[chosen]) pick -= degrees[chosen++];
  std::vector<std::uint32_t> reduced = degrees;
  --reduced[chosen];
  const Multigraph matched = configuration_match(reduced, rng);
  std::vector<Edge> edges(matched.edges().begin(), matched.edges().end());
  edges.push_back({chosen, chosen, false});
  info.parity_vertex = chosen;
  return Multigraph(degrees.size(), std::move(edges));
}

std::vector<std::size_t> draw_path_lengths(std::size_t count, double q, Rng& rng) {
  std::vector<std::size_t> lengths(count);
  for (auto& length : lengths) length = sample_geometric(q, rng);
  return lengths;
}

// Expands the kernel, hangs a PGW(gamma) tree on every 2-core vertex, and
// records the decomposition the construction implies.
ModelSample assemble_c1(Multigraph kernel, std::vector<std::size_t> lengths,
                        double gamma, Rng& rng, SampleInfo info) {
  const Multigraph core = expand_kernel(kernel, lengths);
  const std::size_t core_size = core.num_vertices();
  std::vector<Edge> edges(core.edges().begin(), core.edges().end());

  CoreDecomposition d;
  d.core_vertices.resize(core_size);
  std::iota(d.core_vertices.begin(), d.core_vertices.end(), Vertex{0});
  d.kernel_vertex_map.resize(kernel.num_vertices());
  std::iota(d.kernel_vertex_map.begin(), d.kernel_vertex_map.end(), Vertex{0});
  d.core_degree_two = core_size - kernel.num_vertices();
  d.bushes.reserve(core_size);
  d.bush_members.reserve(core_size);

  std::size_t next = core_size;
  for (Vertex root = 0; root < core_size; ++root) {
    RootedTree tree = sample_pgw_tree(gamma, rng);
    std::vector<Vertex> members(tree.size());
    members[0] = root;
    for (std::size_t node = 1; node < tree.size(); ++node) {
      members[node] = static_cast<Vertex>(next++);
      edges.push_back({members[tree.parent[node]], members[node], false});
    }
    d.bushes.push_back(std::move(tree));
    d.bush_members.push_back(std::move(members));
  }
  if (next >= kNoVertex) throw SizeError("c1 sample exceeds 32-bit vertex ids");

  d.kernel = std::move(kernel);
  d.path_lengths = std::move(lengths);
  ModelSample out;
  out.graph = Multigraph(next, std::move(edges));
  out.decomposition = std::move(d);
  out.info = std::move(info);
  return out;
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  for (const auto& entry : kKindNames) {
    if (entry.name == name) return entry.kind;
  }
  throw ConfigError("unknown model '" + std::string(name) + "'");
}

std::vector<ModelKind> all_model_kinds() {
  std::vector<ModelKind> out;
  for (const auto& entry : kKindNames) out.push_back(entry.kind);
  return out;
}

Multigraph sample_gnp(const ModelParams& params, Rng& rng) {
  const std::size_t n = params.n;
  const double p = params.p;
  std::vector<Edge> edges;
  if (p <= 0.0 || n < 2) return Multigraph(n);
  if (p >= 1.0) {
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex w = 0; w < v; ++w) edges.push_back({w, v, false});
    }
    return Multigraph(n, std::move(edges));
  }
  edges.reserve(static_cast<std::size_t>(p * 0.5 * n * (n - 1.0) * 1.05) + 16);
  // Pairs (w, v) with w < v in row-major order; skip Geom(p) - 1 pairs.
  const double log_q = std::log1p(-p);
  std::uint64_t v = 1;
  double w = -1.0;
  while (v < n) {
    w += 1.0 + std::floor(std::log(rng.uniform_positive()) / log_q);
    while (w >= static_cast<double>(v) && v < n) {
      w -= static_cast<double>(v);
      ++v;
    }
    if (v < n) {
      edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v), false});
    }
  }
  return Multigraph(n, std::move(edges));
}

Multigraph sample_poisson_cloning(const ModelParams& params, Rng& rng,
                                  SampleInfo* info) {
  std::vector<Vertex> clones;
  std::vector<std::uint32_t> degrees(params.n);
  for (Vertex v = 0; v < params.n; ++v) {
    degrees[v] = static_cast<std::uint32_t>(sample_poisson(params.lambda, rng));
    clones.insert(clones.end(), degrees[v], v);
  }
  std::vector<Edge> edges;
  if (clones.size() % 2 == 1) {
    const std::size_t pick = rng.below(clones.size());
    const Vertex owner = clones[pick];
    std::swap(clones[pick], clones.back());
    clones.pop_back();
    edges.push_back({owner, owner, true});
    if (info) info->parity_vertex = owner;
  }
  shuffle(std::span<Vertex>(clones), rng);
  edges.reserve(edges.size() + clones.size() / 2);
  for (std::size_t i = 0; i + 1 < clones.size(); i += 2) {
    edges.push_back({clones[i], clones[i + 1], false});
  }
  if (info) {
    info->Lambda = params.lambda;
    info->drawn_degrees = std::move(degrees);
  }
  return Multigraph(params.n, std::move(edges));
}

Multigraph sample_poisson_configuration(const ModelParams& params, Rng& rng,
                                        SampleInfo* info) {
  require_structured(params, "poisson_configuration");
  SampleInfo local;
  if (eps3n(params) < 1.0) local.warnings.push_back("eps^3 n < 1");
  local.Lambda = draw_Lambda(params, rng, local);
  local.drawn_degrees = draw_kept_degrees(params.n, local.Lambda, 2, rng);
  Multigraph g = match_with_parity_fix(local.drawn_degrees, rng, local);
  if (info) *info = std::move(local);
  return g;
}

Multigraph sample_poisson_geometric(const ModelParams& params, Rng& rng,
                                    SampleInfo* info) {
  require_structured(params, "poisson_geometric");
  SampleInfo local;
  if (eps3n(params) < 1.0) local.warnings.push_back("eps^3 n < 1");
  local.Lambda = draw_Lambda(params, rng, local);
  local.drawn_degrees = draw_kept_degrees(params.n, local.Lambda, 3, rng);
  const Multigraph kernel = match_with_parity_fix(local.drawn_degrees, rng, local);
  const auto lengths = draw_path_lengths(kernel.num_edges(), 1.0 - params.mu, rng);
  if (info) *info = std::move(local);
  return expand_kernel(kernel, lengths);
}

ModelSample sample_c1_general(const ModelParams& params, Rng& rng) {
  require_structured(params, "c1_general");
  SampleInfo info;
  if (eps3n(params) < 10.0) info.warnings.push_back("eps^3 n < 10");
  std::vector<std::uint32_t> degrees;
  for (std::uint64_t attempt = 0;; ++attempt) {
    if (attempt > kParityRedrawCap) {
      throw ResourceError("c1_general: parity redraw cap exceeded");
    }
    info.Lambda = draw_Lambda(params, rng, info);
    degrees = draw_kept_degrees(params.n, info.Lambda, 3, rng);
    if (std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0}) % 2 == 0) {
      break;
    }
    ++info.redraws;
  }
  Multigraph kernel = configuration_match(degrees, rng);
  auto lengths = draw_path_lengths(kernel.num_edges(), 1.0 - params.mu, rng);
  info.drawn_degrees = std::move(degrees);
  return assemble_c1(std::move(kernel), std::move(lengths), params.mu, rng,
                     std::move(info));
}

ModelSample sample_c1_simple(const ModelParams& params, Rng& rng) {
  if (!(params.eps > 0.0 && params.eps < 1.0)) {
    throw DomainError("c1_simple needs 0 < eps < 1");
  }
  SampleInfo info;
  const double scale = eps3n(params);
  if (params.eps * scale > kSimpleRegimeWarn) {
    info.warnings.push_back("eps^4 n > " + std::to_string(kSimpleRegimeWarn) +
                            ": outside the eps = o(n^-1/4) regime");
  }
  std::int64_t N = 0;
  for (std::uint64_t attempt = 0;; ++attempt) {
    if (attempt > kParityRedrawCap) {
      throw ResourceError("c1_simple: redraw cap exceeded");
    }
    const double Z = sample_normal((2.0 / 3.0) * scale, scale, rng);
    N = 2 * static_cast<std::int64_t>(std::floor(Z));
    if (N >= 2) break;
    ++info.redraws;
  }
  if (static_cast<std::uint64_t>(N) >= kNoVertex) {
    throw SizeError("c1_simple: kernel too large");
  }
  std::vector<std::uint32_t> degrees(static_cast<std::size_t>(N), 3);
  Multigraph kernel = configuration_match(degrees, rng);
  auto lengths = draw_path_lengths(kernel.num_edges(), params.eps, rng);
  info.drawn_degrees = std::move(degrees);
  return assemble_c1(std::move(kernel), std::move(lengths), 1.0 - params.eps, rng,
                     std::move(info));
}

ModelSample sample_model(ModelKind kind, const ModelParams& params, Rng& rng) {
  ModelSample out;
  switch (kind) {
    case ModelKind::kGnp:
      out.graph = sample_gnp(params, rng);
      break;
    case ModelKind::kPoissonCloning:
      out.graph = sample_poisson_cloning(params, rng, &out.info);
      break;
    case ModelKind::kPoissonConfiguration:
      out.graph = sample_poisson_configuration(params, rng, &out.info);
      break;
    case ModelKind::kPoissonGeometric:
      out.graph = sample_poisson_geometric(params, rng, &out.info);
      break;
    case ModelKind::kC1General:
      return sample_c1_general(params, rng);
    case ModelKind::kC1Simple:
      return sample_c1_simple(params, rng);
  }
  return out;
}

}  // namespace giant
