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

// Samplers for the random graph models compared by the harness.
//
// All samplers are pure functions of (params, rng). Vertex ids of the
// structured models are laid out as: kernel vertices first, then 2-path
// interiors, then bush (tree) vertices.

#ifndef GIANT_MODELS_HPP_
#define GIANT_MODELS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "giant/analytic.hpp"
#include "giant/decompose.hpp"
#include "giant/multigraph.hpp"
#include "giant/random.hpp"

namespace giant {

enum class ModelKind {
  kGnp,
  kPoissonCloning,
  kPoissonConfiguration,
  kPoissonGeometric,
  kC1General,
  kC1Simple,
};

std::string_view to_string(ModelKind kind);
// Accepts the snake_case names ("gnp", "c1_general", ...). Throws ConfigError.
ModelKind parse_model_kind(std::string_view name);
std::vector<ModelKind> all_model_kinds();

struct SampleInfo {
  double Lambda = 0.0;        // drawn Poisson rate; 0 for gnp
  std::uint64_t redraws = 0;  // rejected draws before acceptance
  std::optional<Vertex> parity_vertex;  // vertex given k-1 half-edges + a loop
  std::vector<std::uint32_t> drawn_degrees;  // per output kernel/core vertex
  std::vector<std::string> warnings;
};

struct ModelSample {
  Multigraph graph;
  std::optional<CoreDecomposition> decomposition;  // c1 models only
  SampleInfo info;
};

inline constexpr std::uint64_t kLambdaRedrawCap = 100;
inline constexpr std::uint64_t kParityRedrawCap = 10'000;
inline constexpr double kSimpleRegimeWarn = 5.0;  // upper limit on eps^4 n

// G(n, p) by geometric skipping over the lexicographic pair order.
Multigraph sample_gnp(const ModelParams& params, Rng& rng);

// i.i.d. Po(lambda) degrees; an odd clone total turns one uniform clone into
// a special loop, the rest are matched uniformly.
Multigraph sample_poisson_cloning(const ModelParams& params, Rng& rng,
                                  SampleInfo* info = nullptr);

// Degrees D_u ~ Po(Lambda) with Lambda ~ N(1+eps-mu, 1/(eps n)); vertices
// with D_u >= 2 are kept (relabeled densely in original order) and matched.
// An odd retained sum is fixed by a size-biased vertex that keeps k-1
// half-edges plus one ordinary loop, so its degree becomes k+1.
Multigraph sample_poisson_configuration(const ModelParams& params, Rng& rng,
                                        SampleInfo* info = nullptr);

// Same draws, kernel over D_u >= 3 with the same parity rule, each kernel
// edge subdivided into a Geom(1-mu) path.
Multigraph sample_poisson_geometric(const ModelParams& params, Rng& rng,
                                    SampleInfo* info = nullptr);

// (Lambda, D) redrawn until sum D_u 1{D_u >= 3} is even; kernel by matching;
// Geom(1-mu) paths; a PGW(mu) tree on every 2-core vertex.
ModelSample sample_c1_general(const ModelParams& params, Rng& rng);

// N = 2 floor(Z), Z ~ N((2/3)eps^3 n, eps^3 n), redrawn until N >= 2; random
// 3-regular kernel; Geom(eps) paths; PGW(1-eps) trees.
ModelSample sample_c1_simple(const ModelParams& params, Rng& rng);

ModelSample sample_model(ModelKind kind, const ModelParams& params, Rng& rng);

}  // namespace giant

#endif  // GIANT_MODELS_HPP_
