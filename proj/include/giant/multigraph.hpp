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

#ifndef GIANT_MULTIGRAPH_HPP_
#define GIANT_MULTIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "giant/random.hpp"

namespace giant {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Undirected edge. A loop has u == v; a special loop is the odd clone left
// over by Poisson cloning and contributes 1 (not 2) to its vertex's degree.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  bool special = false;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable loop- and multi-edge-capable graph over vertices 0..n-1.
//
// Adjacency is stored as CSR "slots": one slot per edge endpoint, so an
// ordinary loop occupies two slots of its vertex and a special loop one. The
// degree of a vertex is therefore exactly its slot count. Slots of a vertex
// appear in edge insertion order.
class Multigraph {
 public:
  struct Slot {
    Vertex neighbor;
    std::uint32_t edge;
  };

  Multigraph() : offsets_(1, 0) {}
  // Normalizes every edge to u <= v. Throws std::out_of_range on endpoints
  // >= n and StructureError on a special flag carried by a non-loop.
  explicit Multigraph(std::size_t n, std::vector<Edge> edges = {});

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  std::span<const Slot> incident(Vertex v) const {
    return {slots_.data() + offsets_[v], slots_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t degree_sum() const { return slots_.size(); }
  std::vector<std::size_t> degrees() const;
  std::size_t num_special() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Slot> slots_;
};

// Contracts a uniformly random perfect matching of sum(degrees) half-edges.
// Throws ParityError when the degree sum is odd.
Multigraph configuration_match(std::span<const std::uint32_t> degrees, Rng& rng);

inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

// Hop distances on the underlying simple graph.
std::vector<std::uint32_t> bfs_distances(const Multigraph& g, Vertex source);

struct Components {
  std::vector<std::uint32_t> label;  // component id per vertex
  std::vector<std::size_t> size;     // vertex count per component id
  // Ids are assigned in order of each component's smallest vertex.
  std::size_t count() const { return size.size(); }
};

Components connected_components(const Multigraph& g);

// Vertices of the largest component in ascending order; ties go to the
// component holding the smallest vertex id. Empty for the empty graph.
std::vector<Vertex> largest_component(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Subgraph induced on `vertices` (ascending, unique). Vertex i of the result
// is vertices[i]; edges keep their relative order.
Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices);

// Edge-list text format: header "n m", then one "u v" line per edge with
// u <= v, special loops as "u u s".
void write_edge_list(const Multigraph& g, std::ostream& out);
// Throws ParseError carrying the offending 1-based line number.
Multigraph read_edge_list(std::istream& in);

}  // namespace giant

#endif  // GIANT_MULTIGRAPH_HPP_
