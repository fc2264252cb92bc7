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
#include <map>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "giant/errors.hpp"
#include "giant/multigraph.hpp"
#include "giant/stats.hpp"

using namespace giant;

namespace {

using Outcome = std::vector<std::pair<Vertex, Vertex>>;

Outcome outcome_of(const Multigraph& g) {
  Outcome out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  std::sort(out.begin(), out.end());
  return out;
}

// Counts perfect matchings of the half-edge list grouped by contracted outcome.
void count_matchings(std::vector<Vertex>& remaining, Outcome& partial,
                     std::map<Outcome, double>& counts) {
  if (remaining.empty()) {
    Outcome key = partial;
    std::sort(key.begin(), key.end());
    counts[key] += 1;
    return;
  }
  const Vertex head = remaining.back();
  remaining.pop_back();
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    const Vertex mate = remaining[i];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
    partial.emplace_back(std::min(head, mate), std::max(head, mate));
    count_matchings(remaining, partial, counts);
    partial.pop_back();
    remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(i), mate);
  }
  remaining.push_back(head);
}

std::map<Outcome, double> matching_law(const std::vector<std::uint32_t>& degrees) {
  std::vector<Vertex> half;
  for (Vertex v = 0; v < degrees.size(); ++v) half.insert(half.end(), degrees[v], v);
  std::map<Outcome, double> counts;
  Outcome partial;
  count_matchings(half, partial, counts);
  double total = 0;
  for (const auto& [k, c] : counts) total += c;
  for (auto& [k, c] : counts) c /= total;
  return counts;
}

Multigraph random_graph(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)), false});
  }
  return Multigraph(n, std::move(edges));
}

std::vector<std::vector<std::uint32_t>> all_pairs(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kUnreachable));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) {
    if (e.u != e.v) d[e.u][e.v] = d[e.v][e.u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] != kUnreachable && d[k][j] != kUnreachable) {
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
      }
    }
  }
  return d;
}

}  // namespace

TEST_CASE("degree counts loops twice and special loops once") {
  const Multigraph g(3, {{0, 0, false}, {1, 1, true}, {0, 2, false}, {2, 0, false}});
  CHECK(g.degree(0) == 4);
  CHECK(g.degree(1) == 1);
  CHECK(g.degree(2) == 2);
  CHECK(g.degree_sum() == 7);
  CHECK(g.num_special() == 1);
  CHECK(g.edge(3).u == 0);  // normalized to u <= v
  CHECK(g.edge(3).v == 2);
  CHECK_THROWS_AS(Multigraph(2, {{0, 1, true}}), StructureError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 2, false}}), std::out_of_range);
}

TEST_CASE("configuration_match small cases") {
  Rng rng(1);
  const std::vector<std::uint32_t> two_ones{1, 1};
  const Multigraph a = configuration_match(two_ones, rng);
  REQUIRE(a.num_edges() == 1);
  CHECK(a.edge(0) == Edge{0, 1, false});
  const std::vector<std::uint32_t> loop{2};
  const Multigraph b = configuration_match(loop, rng);
  REQUIRE(b.num_edges() == 1);
  CHECK(b.edge(0).is_loop());
  const std::vector<std::uint32_t> odd{1, 2};
  CHECK_THROWS_AS(configuration_match(odd, rng), ParityError);
  const std::vector<std::uint32_t> none{0, 0};
  CHECK(configuration_match(none, rng).num_edges() == 0);
}

TEST_CASE("configuration_match on [3,3] gives the 0.4 / 0.6 split") {
  Rng rng = derive_stream(0, "test:match33", 0);
  const std::vector<std::uint32_t> degrees{3, 3};
  int triple = 0;
  constexpr int kSamples = 150000;
  for (int s = 0; s < kSamples; ++s) {
    const Multigraph g = configuration_match(degrees, rng);
    REQUIRE(g.degree(0) == 3);
    REQUIRE(g.degree(1) == 3);
    triple += std::none_of(g.edges().begin(), g.edges().end(),
                           [](const Edge& e) { return e.is_loop(); });
  }
  const double frac = static_cast<double>(triple) / kSamples;
  CHECK(std::fabs(frac - 0.4) <= 0.01);
  CHECK(std::fabs((1 - frac) - 0.6) <= 0.01);
}

TEST_CASE("configuration_match is uniform over labeled matchings") {
  Rng rng = derive_stream(0, "test:matchlaw", 0);
  for (const auto& degrees : std::vector<std::vector<std::uint32_t>>{
           {2, 2, 2}, {1, 1, 1, 1, 1, 1, 2}, {4, 2, 2}, {3, 1, 2, 2}}) {
    const auto law = matching_law(degrees);
    std::map<Outcome, double> seen;
    constexpr int kSamples = 60000;
    for (int s = 0; s < kSamples; ++s) {
      const auto key = outcome_of(configuration_match(degrees, rng));
      REQUIRE(law.count(key) == 1);
      seen[key] += 1;
    }
    std::vector<double> observed;
    std::vector<double> expected;
    for (const auto& [key, prob] : law) {
      observed.push_back(seen[key]);
      expected.push_back(prob * kSamples);
    }
    CHECK(chi_square_gof(observed, expected).p > 0.001);
  }
}

TEST_CASE("configuration_match conserves degrees") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint32_t> degrees(1 + rng.below(200));
    std::size_t total = 0;
    for (auto& d : degrees) total += d = static_cast<std::uint32_t>(rng.below(6));
    if (total % 2) ++degrees[0];
    const Multigraph g = configuration_match(degrees, rng);
    for (Vertex v = 0; v < degrees.size(); ++v) CHECK(g.degree(v) == degrees[v]);
  }
}

TEST_CASE("BFS matches all-pairs shortest paths") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(60);
    const Multigraph g = random_graph(n, rng.below(2 * n), rng);
    const auto oracle = all_pairs(g);
    for (Vertex s = 0; s < n; ++s) REQUIRE(bfs_distances(g, s) == oracle[s]);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        CHECK(oracle[i][j] == oracle[j][i]);
      }
    }
  }
  CHECK_THROWS_AS(bfs_distances(Multigraph(2), 2), std::out_of_range);
}

TEST_CASE("components") {
  const Multigraph edgeless(5);
  CHECK(connected_components(edgeless).count() == 5);
  CHECK(largest_component(edgeless) == std::vector<Vertex>{0});
  CHECK_FALSE(is_connected(edgeless));
  CHECK(largest_component(Multigraph(0)).empty());

  const Multigraph triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(largest_component(triangles) == std::vector<Vertex>{0, 1, 2});

  const Multigraph g(5, {{4, 3}, {3, 2}, {0, 1}});
  const Components c = connected_components(g);
  CHECK(c.count() == 2);
  CHECK(c.label[0] == 0);
  CHECK(c.label[2] == 1);
  CHECK(largest_component(g) == std::vector<Vertex>{2, 3, 4});
}

TEST_CASE("giant of a supercritical random graph has about theta n vertices") {
  Rng rng(41);
  double sum = 0.0;
  constexpr int kReps = 100;
  constexpr std::size_t n = 1000;
  for (int r = 0; r < kReps; ++r) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.uniform() < 2.0 / n) edges.push_back({u, v, false});
      }
    }
    sum += static_cast<double>(largest_component(Multigraph(n, std::move(edges))).size());
  }
  CHECK(sum / kReps == doctest::Approx(796.81).epsilon(0.05));
}

TEST_CASE("induced subgraph keeps internal edges and relabels") {
  const Multigraph g(5, {{0, 1}, {1, 1}, {1, 3}, {3, 4}, {2, 2, true}, {0, 4}});
  const std::vector<Vertex> keep{1, 2, 3};
  const Multigraph h = induced_subgraph(g, keep);
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 3);
  CHECK(h.degree(0) == 3);
  CHECK(h.degree(1) == 1);
  CHECK(h.num_special() == 1);
  const std::vector<Vertex> unsorted{3, 1};
  CHECK_THROWS(induced_subgraph(g, unsorted));
}

TEST_CASE("edge list round trip") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.below(50);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      const auto u = static_cast<Vertex>(rng.below(n));
      edges.push_back({u, rng.below(4) == 0 ? u : static_cast<Vertex>(rng.below(n)), false});
    }
    edges.push_back({0, 0, true});
    const Multigraph g(n, edges);
    std::stringstream buf;
    write_edge_list(g, buf);
    const Multigraph back = read_edge_list(buf);
    CHECK(back.num_vertices() == n);
    CHECK(outcome_of(back) == outcome_of(g));
    CHECK(back.num_special() == 1);
  }
  std::stringstream text("3 1\n0 0 s\n");
  const Multigraph s = read_edge_list(text);
  CHECK(s.degree(0) == 1);
}

TEST_CASE("edge list parse errors carry the line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::stringstream in(text);
    try {
      read_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("3\n") == 1);
  CHECK(line_of("3 2\n0 1\n0 x\n") == 3);
  CHECK(line_of("3 2\n0 1\n0 3\n") == 3);
  CHECK(line_of("3 2\n0 1\n") == 3);
  CHECK(line_of("3 1\n0 1 s\n") == 2);
  CHECK(line_of("3 1\n0 0 q\n") == 2);
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
  CHECK(line_of("3 1\n0 -1\n") == 2);
  CHECK(line_of("3 1\n0 1\n\n  \n") == 0);
}
