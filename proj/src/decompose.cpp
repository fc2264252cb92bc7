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

#include "giant/decompose.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <utility>

#include "giant/errors.hpp"

namespace giant {

std::vector<Vertex> two_core(const Multigraph& g, PeelOrder order) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree = g.degrees();
  std::vector<char> removed(n, 0);
  std::vector<char> queued(n, 0);
  std::deque<Vertex> pending;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] < 2) {
      pending.push_back(v);
      queued[v] = 1;
    }
  }
  while (!pending.empty()) {
    Vertex v;
    if (order == PeelOrder::kFifo) {
      v = pending.front();
      pending.pop_front();
    } else {
      v = pending.back();
      pending.pop_back();
    }
    removed[v] = 1;
    for (const auto& slot : g.incident(v)) {
      const Vertex w = slot.neighbor;
      if (w == v || removed[w]) continue;
      if (--degree[w] < 2 && !queued[w]) {
        queued[w] = 1;
        pending.push_back(w);
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

StrippedCore strip_disjoint_cycles(const Multigraph& core) {
  const Components comps = connected_components(core);
  std::vector<char> bare(comps.count(), 1);
  for (Vertex v = 0; v < core.num_vertices(); ++v) {
    if (core.degree(v) != 2) bare[comps.label[v]] = 0;
  }
  for (const Edge& e : core.edges()) {
    if (e.special) bare[comps.label[e.u]] = 0;
  }
  StrippedCore out;
  for (std::size_t c = 0; c < comps.count(); ++c) {
    if (bare[c]) out.cycle_lengths.push_back(comps.size[c]);
  }
  for (Vertex v = 0; v < core.num_vertices(); ++v) {
    if (!bare[comps.label[v]]) out.vertices.push_back(v);
  }
  out.graph = induced_subgraph(core, out.vertices);
  return out;
}

KernelContraction contract_to_kernel(const Multigraph& stripped) {
  const std::size_t n = stripped.num_vertices();
  std::vector<char> is_kernel(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (stripped.degree(v) < 2) {
      throw StructureError("contract_to_kernel: vertex " + std::to_string(v) +
                           " has degree below 2");
    }
    if (stripped.degree(v) >= 3) is_kernel[v] = 1;
  }
  for (const Edge& e : stripped.edges()) {
    if (e.special) is_kernel[e.u] = 1;
  }

  KernelContraction out;
  std::vector<Vertex> kernel_id(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (is_kernel[v]) {
      kernel_id[v] = static_cast<Vertex>(out.vertex_map.size());
      out.vertex_map.push_back(v);
    }
  }

  std::vector<char> used(stripped.num_edges(), 0);
  std::vector<Edge> kernel_edges;
  std::size_t covered = 0;
  for (const Vertex start : out.vertex_map) {
    for (const auto& first : stripped.incident(start)) {
      if (used[first.edge]) continue;
      used[first.edge] = 1;
      ++covered;
      if (stripped.edge(first.edge).special) {
        kernel_edges.push_back({kernel_id[start], kernel_id[start], true});
        out.path_lengths.push_back(1);
        continue;
      }
      std::size_t length = 1;
      std::uint32_t via = first.edge;
      Vertex cur = first.neighbor;
      while (!is_kernel[cur]) {
        // Degree-2 vertex: leave through the slot not carrying `via`.
        const auto slots = stripped.incident(cur);
        const auto& next = slots[0].edge != via ? slots[0] : slots[1];
        if (next.edge == via || used[next.edge]) {
          throw StructureError("contract_to_kernel: malformed 2-path");
        }
        used[next.edge] = 1;
        ++covered;
        via = next.edge;
        cur = next.neighbor;
        ++length;
      }
      kernel_edges.push_back({kernel_id[start], kernel_id[cur], false});
      out.path_lengths.push_back(length);
    }
  }
  if (covered != stripped.num_edges()) {
    throw StructureError(
        "contract_to_kernel: a component has no vertex of degree >= 3 "
        "(strip disjoint cycles first)");
  }
  out.kernel = Multigraph(out.vertex_map.size(), std::move(kernel_edges));
  return out;
}

Bushes extract_bushes(const Multigraph& g, std::span<const Vertex> core_vertices) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in_core(n, 0);
  for (const Vertex v : core_vertices) in_core[v] = 1;
  std::vector<std::uint32_t> owner(n, RootedTree::kNoParent);
  constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();

  Bushes out;
  out.trees.reserve(core_vertices.size());
  out.members.reserve(core_vertices.size());
  std::vector<std::uint32_t> parent_edge;
  for (std::size_t i = 0; i < core_vertices.size(); ++i) {
    const Vertex root = core_vertices[i];
    RootedTree tree;
    std::vector<Vertex> members{root};
    parent_edge.assign(1, kNoEdge);
    owner[root] = static_cast<std::uint32_t>(i);
    for (std::size_t node = 0; node < members.size(); ++node) {
      const Vertex x = members[node];
      for (const auto& slot : g.incident(x)) {
        if (slot.edge == parent_edge[node]) continue;
        const Vertex w = slot.neighbor;
        if (in_core[w]) {
          if (node == 0) continue;  // core edge or loop at the root
          throw StructureError("extract_bushes: vertex " + std::to_string(x) +
                               " outside the core touches the core twice");
        }
        if (owner[w] != RootedTree::kNoParent) {
          throw StructureError("extract_bushes: vertex " + std::to_string(w) +
                               " reachable twice outside the core");
        }
        owner[w] = static_cast<std::uint32_t>(i);
        tree.parent.push_back(static_cast<std::uint32_t>(node));
        parent_edge.push_back(slot.edge);
        members.push_back(w);
      }
    }
    out.trees.push_back(std::move(tree));
    out.members.push_back(std::move(members));
  }
  return out;
}

std::size_t CoreDecomposition::stripped_cycle_vertices() const {
  return std::accumulate(stripped_cycle_lengths.begin(),
                         stripped_cycle_lengths.end(), std::size_t{0});
}

std::size_t CoreDecomposition::total_bush_size() const {
  std::size_t total = 0;
  for (const auto& tree : bushes) total += tree.size();
  return total;
}

CoreDecomposition decompose(const Multigraph& g) {
  CoreDecomposition d;
  d.core_vertices = two_core(g);
  const Multigraph core = induced_subgraph(g, d.core_vertices);
  for (Vertex v = 0; v < core.num_vertices(); ++v) {
    if (core.degree(v) == 2) ++d.core_degree_two;
  }
  StrippedCore stripped = strip_disjoint_cycles(core);
  d.stripped_cycle_lengths = std::move(stripped.cycle_lengths);
  KernelContraction kc = contract_to_kernel(stripped.graph);
  d.kernel = std::move(kc.kernel);
  d.path_lengths = std::move(kc.path_lengths);
  d.kernel_vertex_map.reserve(kc.vertex_map.size());
  for (const Vertex k : kc.vertex_map) {
    d.kernel_vertex_map.push_back(d.core_vertices[stripped.vertices[k]]);
  }
  Bushes bushes = extract_bushes(g, d.core_vertices);
  d.bushes = std::move(bushes.trees);
  d.bush_members = std::move(bushes.members);
  return d;
}

nlohmann::ordered_json decomposition_summary(const CoreDecomposition& d) {
  nlohmann::ordered_json out;
  out["core_size"] = d.core_vertices.size();
  out["stripped_cycle_lengths"] = d.stripped_cycle_lengths;
  out["kernel_vertices"] = d.kernel.num_vertices();
  out["kernel_edges"] = d.kernel.num_edges();
  out["path_lengths"] = d.path_lengths;
  std::vector<std::size_t> sizes;
  sizes.reserve(d.bushes.size());
  for (const auto& tree : d.bushes) sizes.push_back(tree.size());
  out["bush_sizes"] = std::move(sizes);
  return out;
}

Multigraph expand_kernel(const Multigraph& kernel,
                         std::span<const std::size_t> path_lengths) {
  if (path_lengths.size() != kernel.num_edges()) {
    throw std::invalid_argument("expand_kernel: one length per kernel edge");
  }
  std::size_t n = kernel.num_vertices();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < kernel.num_edges(); ++i) {
    const Edge& e = kernel.edge(i);
    const std::size_t length = path_lengths[i];
    if (length == 0) throw std::invalid_argument("expand_kernel: zero length");
    if (e.special) {
      edges.push_back(e);
      continue;
    }
    Vertex prev = e.u;
    for (std::size_t step = 1; step < length; ++step) {
      const auto fresh = static_cast<Vertex>(n++);
      edges.push_back({prev, fresh, false});
      prev = fresh;
    }
    edges.push_back({prev, e.v, false});
  }
  return Multigraph(n, std::move(edges));
}

}  // namespace giant
