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
#include <bit>
#include <vector>

#include "doctest.h"
#include "giant/decompose.hpp"
#include "giant/errors.hpp"

using namespace giant;

namespace {

Multigraph random_graph(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)), false});
  }
  return Multigraph(n, std::move(edges));
}

// Largest subset with induced minimum degree >= 2. Subsets are scanned in
// decreasing size, so the first hit is the answer (the 2-core is the unique
// maximum, containing every other such set).
std::vector<Vertex> brute_force_core(const Multigraph& g) {
  const auto n = static_cast<unsigned>(g.num_vertices());
  for (int size = static_cast<int>(n); size > 0; --size) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<int> deg(n, 0);
      for (const Edge& e : g.edges()) {
        if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) {
          deg[e.u] += e.u == e.v ? 2 : 1;
          if (e.u != e.v) deg[e.v] += 1;
        }
      }
      bool ok = true;
      for (unsigned v = 0; v < n; ++v) ok = ok && (!(mask >> v & 1u) || deg[v] >= 2);
      if (!ok) continue;
      std::vector<Vertex> out;
      for (unsigned v = 0; v < n; ++v) {
        if (mask >> v & 1u) out.push_back(v);
      }
      return out;
    }
  }
  return {};
}

std::vector<std::size_t> sorted_degrees(const Multigraph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::uint32_t> sorted_distances(const Multigraph& g, Vertex s) {
  auto d = bfs_distances(g, s);
  std::sort(d.begin(), d.end());
  while (!d.empty() && d.back() == kUnreachable) d.pop_back();
  return d;
}

// Theta graph: hubs 0 and 1 joined by paths of 2, 3 and 4 edges.
Multigraph theta_graph() {
  return Multigraph(8, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}});
}

}  // namespace

TEST_CASE("2-core of small graphs") {
  CHECK(two_core(Multigraph(0)).empty());
  const Multigraph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(two_core(tree).empty());
  const Multigraph tri_pendant(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  CHECK(two_core(tri_pendant) == std::vector<Vertex>{0, 1, 2});
  const Multigraph loop(2, {{0, 0}, {0, 1}});
  CHECK(two_core(loop) == std::vector<Vertex>{0});
  const Multigraph special(2, {{0, 0, true}, {0, 1}});
  CHECK(two_core(special).empty());
  const Multigraph parallel(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(two_core(parallel) == std::vector<Vertex>{0, 1});
}

TEST_CASE("2-core equals the exhaustive subset oracle") {
  Rng rng = derive_stream(0, "test:core", 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const Multigraph g = random_graph(n, rng.below(2 * n + 1), rng);
    const auto core = two_core(g);
    REQUIRE(core == brute_force_core(g));
    CHECK(two_core(g, PeelOrder::kLifo) == core);
    // Idempotent: the core of the core is everything.
    const Multigraph h = induced_subgraph(g, core);
    CHECK(two_core(h).size() == h.num_vertices());
  }
}

TEST_CASE("peeling order does not change the core on larger graphs") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 100 + rng.below(900);
    const Multigraph g = random_graph(n, n / 2 + rng.below(n / 2), rng);
    CHECK(two_core(g, PeelOrder::kFifo) == two_core(g, PeelOrder::kLifo));
  }
}

TEST_CASE("disjoint cycles are stripped and recorded") {
  const Multigraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const StrippedCore s = strip_disjoint_cycles(c5);
  CHECK(s.graph.num_vertices() == 0);
  CHECK(s.cycle_lengths == std::vector<std::size_t>{5});

  const StrippedCore t = strip_disjoint_cycles(theta_graph());
  CHECK(t.cycle_lengths.empty());
  CHECK(t.graph.num_vertices() == 8);

  const Multigraph mixed(5, {{0, 0}, {1, 2}, {2, 1}, {3, 3, true}, {3, 4}, {4, 3}});
  const StrippedCore m = strip_disjoint_cycles(mixed);
  auto lengths = m.cycle_lengths;
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{1, 2});
  CHECK(m.vertices == std::vector<Vertex>{3, 4});
}

TEST_CASE("theta graph contracts to two vertices and three edges") {
  const KernelContraction k = contract_to_kernel(theta_graph());
  CHECK(k.kernel.num_vertices() == 2);
  CHECK(k.kernel.num_edges() == 3);
  CHECK(k.vertex_map == std::vector<Vertex>{0, 1});
  auto lengths = k.path_lengths;
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("a cycle through a kernel vertex becomes a loop") {
  std::vector<Edge> edges{{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}};
  for (const Edge e : std::vector<Edge>{{0, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 0}}) {
    edges.push_back(e);
  }
  const KernelContraction k = contract_to_kernel(Multigraph(12, edges));
  CHECK(k.kernel.num_vertices() == 2);
  CHECK(k.kernel.num_edges() == 4);
  std::size_t loops = 0;
  for (std::size_t i = 0; i < k.kernel.num_edges(); ++i) {
    if (k.kernel.edge(i).is_loop()) {
      ++loops;
      CHECK(k.kernel.edge(i).u == 0);
      CHECK(k.path_lengths[i] == 5);
    }
  }
  CHECK(loops == 1);
}

TEST_CASE("special loops make kernel vertices") {
  // A cycle carrying a special loop is not bare: the marked vertex has
  // degree 3 and the cycle contracts to one loop.
  const Multigraph g(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0, true}});
  CHECK(strip_disjoint_cycles(g).cycle_lengths.empty());
  const KernelContraction k = contract_to_kernel(g);
  CHECK(k.kernel.num_vertices() == 1);
  CHECK(k.kernel.num_edges() == 2);
  CHECK(k.kernel.num_special() == 1);
}

TEST_CASE("contraction rejects invalid input") {
  const Multigraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_THROWS_AS(contract_to_kernel(c4), StructureError);
  const Multigraph pendant(4, {{0, 1}, {0, 1}, {0, 1}, {1, 2}});
  CHECK_THROWS_AS(contract_to_kernel(pendant), StructureError);
}

TEST_CASE("kernel re-expansion round trip on random stripped cores") {
  Rng rng = derive_stream(0, "test:expand", 0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 10 + rng.below(290);
    std::vector<std::uint32_t> degrees(n);
    std::size_t total = 0;
    for (auto& d : degrees) total += d = static_cast<std::uint32_t>(1 + rng.below(3));
    if (total % 2) ++degrees[0];
    const Multigraph g = configuration_match(degrees, rng);
    const CoreDecomposition d = decompose(g);
    const Multigraph core = induced_subgraph(g, d.core_vertices);
    const StrippedCore stripped = strip_disjoint_cycles(core);
    const Multigraph expanded = expand_kernel(d.kernel, d.path_lengths);

    std::size_t path_sum = 0;
    for (const auto l : d.path_lengths) path_sum += l;
    REQUIRE(path_sum == stripped.graph.num_edges());
    REQUIRE(expanded.num_vertices() == stripped.graph.num_vertices());
    REQUIRE(expanded.num_edges() == stripped.graph.num_edges());
    CHECK(sorted_degrees(expanded) == sorted_degrees(stripped.graph));
    CHECK(d.stripped_cycle_vertices() + stripped.graph.num_vertices() == core.num_vertices());
    for (Vertex k = 0; k < d.kernel.num_vertices(); ++k) {
      CHECK(d.kernel.degree(k) >= 3);
      const Vertex in_g = d.kernel_vertex_map[k];
      const auto pos = std::lower_bound(d.core_vertices.begin(), d.core_vertices.end(), in_g);
      const auto in_core = static_cast<Vertex>(pos - d.core_vertices.begin());
      CHECK(sorted_distances(expanded, k) == sorted_distances(core, in_core));
    }
  }
}

TEST_CASE("bushes partition the component") {
  // Triangle 0-1-2 with a path 2-3-4 and a star at 0.
  const Multigraph g(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {0, 5}, {0, 6}});
  const CoreDecomposition d = decompose(g);
  REQUIRE(d.core_vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(d.bushes[0].size() == 3);
  CHECK(d.bushes[1].size() == 1);
  CHECK(d.bushes[2].size() == 3);
  CHECK(d.bush_members[2] == std::vector<Vertex>{2, 3, 4});
  CHECK(d.bushes[2].parent == std::vector<std::uint32_t>{RootedTree::kNoParent, 0, 1});
  CHECK(d.total_bush_size() == 7);
  CHECK(d.stripped_cycle_lengths == std::vector<std::size_t>{3});
  CHECK(d.kernel.num_vertices() == 0);

  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 50 + rng.below(500);
    const Multigraph r = random_graph(n, n, rng);
    const auto giant = largest_component(r);
    const Multigraph c = induced_subgraph(r, giant);
    const CoreDecomposition dc = decompose(c);
    if (dc.core_vertices.empty()) continue;
    std::vector<int> hits(c.num_vertices(), 0);
    for (const auto& members : dc.bush_members) {
      for (const Vertex v : members) ++hits[v];
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(dc.total_bush_size() == c.num_vertices());
  }
}

TEST_CASE("bush extraction rejects a vertex that is not a valid core") {
  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}});
  const std::vector<Vertex> wrong{0, 1, 2};
  CHECK_THROWS_AS(extract_bushes(g, wrong), StructureError);
}

TEST_CASE("summary carries sizes") {
  const CoreDecomposition d = decompose(theta_graph());
  const auto j = decomposition_summary(d);
  CHECK(j["core_size"] == 8);
  CHECK(j["kernel_vertices"] == 2);
  CHECK(j["kernel_edges"] == 3);
  CHECK(j["bush_sizes"].size() == 8);
  CHECK(d.core_degree_two == 6);
}

TEST_CASE("expand_kernel argument checks") {
  const Multigraph k(1, {{0, 0}});
  const std::vector<std::size_t> none;
  CHECK_THROWS(expand_kernel(k, none));
  const std::vector<std::size_t> zero{0};
  CHECK_THROWS(expand_kernel(k, zero));
  const std::vector<std::size_t> three{3};
  const Multigraph c3 = expand_kernel(k, three);
  CHECK(c3.num_vertices() == 3);
  CHECK(c3.num_edges() == 3);
}
