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


#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "giant/decompose.hpp"
#include "giant/errors.hpp"
#include "giant/models.hpp"
#include "giant/stats.hpp"

using namespace giant;

// Finite-n expectations for n = 1e6, eps = 0.05, averaged over the normal law
// of Lambda by quadrature (mpmath, 30 digits):
//   kernel vertices  n E[P(Po(Lambda) >= 3)]                    = 148.314
//   kernel edges     n E[E(D; D >= 3)] / 2                      = 224.334
//   degree-2 count   n E[P(Po(Lambda) = 2)]                     = 4393.80
//   c1 2-core        kernel vertices + kernel edges (1/(1-mu) - 1) = 4560.23
//   c1 degree-2      kernel edges (1/(1-mu) - 1)                = 4411.92
//   c1 component     2-core / (1 - mu)                          = 94245.1
namespace oracle {
constexpr double kKernelVertices = 148.314249;
constexpr double kKernelEdges = 224.333907;
constexpr double kDegreeTwo = 4393.80132;
constexpr double kC1Core = 4560.23051;
constexpr double kC1DegreeTwo = 4411.91626;
constexpr double kC1Component = 94245.0907;
// (n / 2)(lambda - mu)(1 - mu / lambda) at n = 1e6, lambda = 1.05.
constexpr double kGeometricEdges = 4609.51799;
}  // namespace oracle

namespace {

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (const double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("model names round trip") {
  for (const ModelKind k : all_model_kinds()) CHECK(parse_model_kind(to_string(k)) == k);
  CHECK(all_model_kinds().size() == 6);
  CHECK(to_string(ModelKind::kC1General) == "c1_general");
  CHECK_THROWS_AS(parse_model_kind("bogus"), ConfigError);
}

TEST_CASE("gnp edge cases and edge count") {
  Rng rng(1);
  CHECK(sample_gnp(ModelParams::from_p(10, 0.0), rng).num_edges() == 0);
  CHECK(sample_gnp(ModelParams::from_p(5, 1.0), rng).num_edges() == 10);
  CHECK(sample_gnp(ModelParams::from_p(1, 0.5), rng).num_edges() == 0);

  const auto params = ModelParams::from_p(10000, 1e-4);
  std::vector<double> counts;
  for (int r = 0; r < 100; ++r) {
    const Multigraph g = sample_gnp(params, rng);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : g.edges()) {
      REQUIRE(e.u < e.v);
      REQUIRE(seen.emplace(e.u, e.v).second);
    }
    counts.push_back(static_cast<double>(g.num_edges()));
  }
  const double expected = 10000.0 * 9999.0 / 2.0 * 1e-4;
  CHECK(std::fabs(mean_of(counts) - expected) <= 4.0 * std::sqrt(expected / 100.0));
}

TEST_CASE("gnp pairs are uniform over the index range") {
  // Every pair equally likely: first endpoint counts follow the row sizes.
  Rng rng(2);
  const auto params = ModelParams::from_p(40, 0.05);
  std::vector<double> by_row(40, 0.0);
  for (int r = 0; r < 4000; ++r) {
    const Multigraph g = sample_gnp(params, rng);
    for (const Edge& e : g.edges()) by_row[e.v] += 1.0;
  }
  std::vector<double> observed(by_row.begin() + 1, by_row.end());
  std::vector<double> expected;
  double total = 0.0;
  for (const double o : observed) total += o;
  // Conditional on the total, row v receives a share proportional to v.
  for (int v = 1; v < 40; ++v) expected.push_back(total * v / 780.0);
  CHECK(chi_square_gof(observed, expected).p > 0.001);
}

TEST_CASE("gnp giant at n = 1e6, eps = 0.05") {
  const auto params = ModelParams::from_eps(1000000, 0.05);
  std::vector<double> sizes;
  for (int r = 0; r < 20; ++r) {
    Rng rng = derive_stream(0, "test:gnp_giant", r);
    sizes.push_back(static_cast<double>(largest_component(sample_gnp(params, rng)).size()));
  }
  CHECK(mean_of(sizes) == doctest::Approx(params.theta * 1e6).epsilon(0.10));
}

TEST_CASE("Poisson cloning degrees and parity loop") {
  Rng rng(3);
  const auto empty = ModelParams::from_p(100, 0.0);
  CHECK(sample_poisson_cloning(empty, rng).num_edges() == 0);

  const auto params = ModelParams::from_eps(100000, 0.1);
  int odd = 0;
  for (int r = 0; r < 20; ++r) {
    SampleInfo info;
    const Multigraph g = sample_poisson_cloning(params, rng, &info);
    REQUIRE(info.drawn_degrees.size() == params.n);
    std::uint64_t total = 0;
    for (Vertex v = 0; v < params.n; ++v) {
      REQUIRE(g.degree(v) == info.drawn_degrees[v]);
      total += info.drawn_degrees[v];
    }
    CHECK(std::fabs(static_cast<double>(total) - 110000.0) <= 4.0 * std::sqrt(110000.0));
    CHECK(g.num_special() == total % 2);
    CHECK(info.parity_vertex.has_value() == (total % 2 == 1));
    odd += static_cast<int>(total % 2);
  }
  CHECK(odd > 0);
  CHECK(odd < 20);
}

TEST_CASE("Poisson cloning 2-core size") {
  // A vertex is in the 2-core iff at least two of its clones lead to
  // infinite branches: n P(Po(lambda theta) >= 2).
  const auto params = ModelParams::from_eps(100000, 0.1);
  const double x = params.lambda * params.theta;
  const double expected = 1e5 * (1.0 - std::exp(-x) * (1.0 + x));
  std::vector<double> cores;
  for (int r = 0; r < 30; ++r) {
    Rng rng = derive_stream(0, "test:cloning_core", r);
    cores.push_back(static_cast<double>(two_core(sample_poisson_cloning(params, rng)).size()));
  }
  CHECK(mean_of(cores) == doctest::Approx(expected).epsilon(0.10));
}

TEST_CASE("Poisson-configuration structure at n = 1e6, eps = 0.05") {
  const auto params = ModelParams::from_eps(1000000, 0.05);
  std::vector<double> kv, ke, deg2, stripped_frac;
  for (int r = 0; r < 100; ++r) {
    Rng rng = derive_stream(0, "test:pconf", r);
    SampleInfo info;
    const Multigraph g = sample_poisson_configuration(params, rng, &info);
    REQUIRE(g.num_vertices() == info.drawn_degrees.size());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const std::size_t bump = info.parity_vertex == v ? 1 : 0;
      REQUIRE(g.degree(v) == info.drawn_degrees[v] + bump);
      REQUIRE(info.drawn_degrees[v] >= 2);
    }
    const CoreDecomposition d = decompose(g);
    REQUIRE(d.core_vertices.size() == g.num_vertices());
    kv.push_back(static_cast<double>(d.kernel.num_vertices()));
    ke.push_back(static_cast<double>(d.kernel.num_edges()));
    deg2.push_back(static_cast<double>(d.core_degree_two));
    stripped_frac.push_back(static_cast<double>(d.stripped_cycle_vertices()) /
                            static_cast<double>(g.num_vertices()));
  }
  CHECK(mean_of(kv) == doctest::Approx(oracle::kKernelVertices).epsilon(0.05));
  CHECK(mean_of(ke) == doctest::Approx(oracle::kKernelEdges).epsilon(0.05));
  CHECK(mean_of(deg2) == doctest::Approx(oracle::kDegreeTwo).epsilon(0.05));
  CHECK(mean_of(stripped_frac) <= 0.01);
}

TEST_CASE("Poisson-geometric kernel, paths and edge count") {
  const auto params = ModelParams::from_eps(1000000, 0.05);
  std::vector<double> edges, kernel_edges_geo, kernel_edges_conf;
  double path_sum = 0.0;
  double path_count = 0.0;
  for (int r = 0; r < 100; ++r) {
    Rng rng = derive_stream(0, "test:pgeo", r);
    SampleInfo info;
    const Multigraph g = sample_poisson_geometric(params, rng, &info);
    for (Vertex v = 0; v < info.drawn_degrees.size(); ++v) {
      const std::size_t bump = info.parity_vertex == v ? 1 : 0;
      REQUIRE(g.degree(v) == info.drawn_degrees[v] + bump);
    }
    for (Vertex v = static_cast<Vertex>(info.drawn_degrees.size()); v < g.num_vertices(); ++v) {
      REQUIRE(g.degree(v) == 2);
    }
    edges.push_back(static_cast<double>(g.num_edges()));
    const CoreDecomposition d = decompose(g);
    CHECK(d.kernel.num_vertices() == info.drawn_degrees.size());
    kernel_edges_geo.push_back(static_cast<double>(d.kernel.num_edges()));
    for (const auto l : d.path_lengths) {
      path_sum += static_cast<double>(l);
      path_count += 1.0;
    }
    Rng other = derive_stream(0, "test:pconf_ks", r);
    const CoreDecomposition dc = decompose(sample_poisson_configuration(params, other));
    kernel_edges_conf.push_back(static_cast<double>(dc.kernel.num_edges()));
  }
  CHECK(mean_of(edges) == doctest::Approx(oracle::kGeometricEdges).epsilon(0.05));
  CHECK(path_sum / path_count == doctest::Approx(1.0 / (1.0 - params.mu)).epsilon(0.03));
  CHECK(ks_two_sample(kernel_edges_geo, kernel_edges_conf).p > 0.001);
}

TEST_CASE("c1_general carries its own decomposition") {
  const auto params = ModelParams::from_eps(100000, 0.1);
  for (int r = 0; r < 20; ++r) {
    Rng rng = derive_stream(0, "test:c1self", r);
    const ModelSample s = sample_c1_general(params, rng);
    REQUIRE(s.decomposition.has_value());
    const CoreDecomposition& built = *s.decomposition;
    CHECK(is_connected(s.graph));
    for (Vertex k = 0; k < built.kernel.num_vertices(); ++k) {
      CHECK(built.kernel.degree(k) == s.info.drawn_degrees[k]);
      CHECK(built.kernel.degree(k) >= 3);
    }
    const CoreDecomposition found = decompose(s.graph);
    CHECK(found.core_vertices == built.core_vertices);
    CHECK(found.kernel.num_vertices() == built.kernel.num_vertices());
    CHECK(found.kernel.num_edges() == built.kernel.num_edges());
    CHECK(found.kernel_vertex_map == built.kernel_vertex_map);
    CHECK(sorted(found.path_lengths) == sorted(built.path_lengths));
    CHECK(found.core_degree_two == built.core_degree_two);
    CHECK(found.stripped_cycle_lengths.empty());
    CHECK(found.total_bush_size() == s.graph.num_vertices());
    std::vector<std::size_t> a, b;
    for (const auto& t : found.bushes) a.push_back(t.size());
    for (const auto& t : built.bushes) b.push_back(t.size());
    CHECK(a == b);
  }
}

TEST_CASE("c1_general sizes at n = 1e6, eps = 0.05") {
  const auto params = ModelParams::from_eps(1000000, 0.05);
  std::vector<double> core, deg2, comp, kv, ke;
  for (int r = 0; r < 100; ++r) {
    Rng rng = derive_stream(0, "test:c1sizes", r);
    const ModelSample s = sample_c1_general(params, rng);
    const CoreDecomposition& d = *s.decomposition;
    core.push_back(static_cast<double>(d.core_vertices.size()));
    deg2.push_back(static_cast<double>(d.core_degree_two));
    comp.push_back(static_cast<double>(s.graph.num_vertices()));
    kv.push_back(static_cast<double>(d.kernel.num_vertices()));
    ke.push_back(static_cast<double>(d.kernel.num_edges()));
  }
  CHECK(mean_of(kv) == doctest::Approx(oracle::kKernelVertices).epsilon(0.05));
  CHECK(mean_of(ke) == doctest::Approx(oracle::kKernelEdges).epsilon(0.05));
  CHECK(mean_of(core) == doctest::Approx(oracle::kC1Core).epsilon(0.05));
  CHECK(mean_of(deg2) == doctest::Approx(oracle::kC1DegreeTwo).epsilon(0.05));
  CHECK(mean_of(comp) == doctest::Approx(oracle::kC1Component).epsilon(0.05));
  // The giant is (1 - mu / lambda) n to first order.
  CHECK(mean_of(comp) == doctest::Approx((1.0 - params.mu / params.lambda) * 1e6).epsilon(0.10));
}

TEST_CASE("c1_simple kernel is 3-regular with the normal size law") {
  const auto params = ModelParams::from_eps(10000000, 0.02);
  std::vector<double> kv, m2p;
  for (int r = 0; r < 100; ++r) {
    Rng rng = derive_stream(0, "test:c1simple", r);
    const ModelSample s = sample_c1_simple(params, rng);
    const CoreDecomposition& d = *s.decomposition;
    CHECK(s.info.warnings.empty());
    CHECK(d.kernel.num_vertices() % 2 == 0);
    for (Vertex k = 0; k < d.kernel.num_vertices(); ++k) REQUIRE(d.kernel.degree(k) == 3);
    kv.push_back(static_cast<double>(d.kernel.num_vertices()));
    m2p.push_back(static_cast<double>(*std::max_element(d.path_lengths.begin(), d.path_lengths.end())));
  }
  // E[2 floor(Z)] = (4/3) eps^3 n - 1 up to the (negligible) N >= 2 conditioning.
  CHECK(mean_of(kv) == doctest::Approx(4.0 / 3.0 * 80.0 - 1.0).epsilon(0.05));
  const double scale = std::log(80.0) / 0.02;
  CHECK(mean_of(m2p) >= 0.6 * scale);
  CHECK(mean_of(m2p) <= 1.8 * scale);
}

TEST_CASE("c1_simple regime warning and domain") {
  Rng rng(4);
  const ModelSample s = sample_c1_simple(ModelParams::from_eps(10000000, 0.1), rng);
  CHECK_FALSE(s.info.warnings.empty());
  CHECK_THROWS_AS(sample_c1_simple(ModelParams::from_eps(1000, 1.0), rng), std::exception);
}

TEST_CASE("structured models reject subcritical parameters") {
  Rng rng(5);
  const auto sub = ModelParams::from_p(1000, 0.0005);
  CHECK_THROWS_AS(sample_poisson_configuration(sub, rng), DomainError);
  CHECK_THROWS_AS(sample_poisson_geometric(sub, rng), DomainError);
  CHECK_THROWS_AS(sample_c1_general(sub, rng), DomainError);
}

TEST_CASE("sampling is a function of the stream") {
  const auto params = ModelParams::from_eps(100000, 0.1);
  for (const ModelKind k : all_model_kinds()) {
    Rng a = derive_stream(9, "test:det", 0);
    Rng b = derive_stream(9, "test:det", 0);
    const ModelSample x = sample_model(k, params, a);
    const ModelSample y = sample_model(k, params, b);
    CHECK(x.graph.num_vertices() == y.graph.num_vertices());
    CHECK(std::equal(x.graph.edges().begin(), x.graph.edges().end(), y.graph.edges().begin(),
                     y.graph.edges().end()));
  }
}
