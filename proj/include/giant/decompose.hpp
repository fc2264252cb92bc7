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

// Structural dissection of a component: 2-core, bare cycles, kernel with
// 2-path lengths, and the trees ("bushes") hanging off the 2-core.

#ifndef GIANT_DECOMPOSE_HPP_
#define GIANT_DECOMPOSE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "giant/analytic.hpp"
#include "giant/multigraph.hpp"
#include "json.hpp"

namespace giant {

enum class PeelOrder { kFifo, kLifo };

// Vertex set (ascending) of the 2-core. Loops count 2 toward the degree and
// special loops 1, matching Multigraph::degree.
std::vector<Vertex> two_core(const Multigraph& g, PeelOrder order = PeelOrder::kFifo);

struct StrippedCore {
  Multigraph graph;                   // relabeled, ids index `vertices`
  std::vector<Vertex> vertices;       // input id of each remaining vertex
  std::vector<std::size_t> cycle_lengths;
};

// Removes every component that is a bare cycle (all degrees exactly 2, no
// special loop). Lengths are reported in order of each cycle's smallest vertex.
StrippedCore strip_disjoint_cycles(const Multigraph& core);

struct KernelContraction {
  Multigraph kernel;
  std::vector<Vertex> vertex_map;         // kernel vertex -> input vertex
  std::vector<std::size_t> path_lengths;  // one per kernel edge
};

// Kernel vertices are those of degree >= 3, plus the (at most one per special
// loop) vertex carrying a special loop, which cannot sit inside a 2-path. Each
// maximal 2-path becomes one kernel edge labeled with its length; a special
// loop becomes a special kernel loop of length 1. Throws StructureError if a
// component has no kernel vertex (a bare cycle the caller did not strip).
KernelContraction contract_to_kernel(const Multigraph& stripped);

struct Bushes {
  std::vector<RootedTree> trees;             // parallel to the core vertex list
  std::vector<std::vector<Vertex>> members;  // members[i][k] is node k of trees[i]
};

// Tree of vertices reachable from each core vertex without entering the
// core. `core_vertices` must be ascending. Throws StructureError if a
// non-core vertex is reachable from two roots or closes a cycle.
Bushes extract_bushes(const Multigraph& g, std::span<const Vertex> core_vertices);

struct CoreDecomposition {
  std::vector<Vertex> core_vertices;  // ascending ids in the analyzed graph
  std::vector<std::size_t> stripped_cycle_lengths;
  Multigraph kernel;
  std::vector<Vertex> kernel_vertex_map;  // kernel vertex -> analyzed graph id
  std::vector<std::size_t> path_lengths;  // per kernel edge
  std::vector<RootedTree> bushes;         // parallel to core_vertices
  std::vector<std::vector<Vertex>> bush_members;
  std::size_t core_degree_two = 0;        // 2-core vertices of core degree 2

  std::size_t stripped_cycle_vertices() const;
  std::size_t total_bush_size() const;
};

// Full pipeline on an analyzed graph (normally one component).
CoreDecomposition decompose(const Multigraph& g);

// {core_size, stripped_cycle_lengths, kernel_vertices, kernel_edges,
//  path_lengths, bush_sizes}
nlohmann::ordered_json decomposition_summary(const CoreDecomposition& d);

// Rebuilds the stripped 2-core by subdividing every kernel edge into a path
// of its recorded length. Vertices 0..|K|-1 are the kernel vertices.
Multigraph expand_kernel(const Multigraph& kernel,
                         std::span<const std::size_t> path_lengths);

}  // namespace giant

#endif  // GIANT_DECOMPOSE_HPP_
