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

#include "giant/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "giant/errors.hpp"

namespace giant {

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), offsets_(n + 1, 0) {
  if (edges_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw SizeError("too many edges for 32-bit edge ids");
  }
  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw std::out_of_range("edge endpoint " +
                              std::to_string(std::max(e.u, e.v)) +
                              " out of range for n = " + std::to_string(n_));
    }
    if (e.special && !e.is_loop()) {
      throw StructureError("special flag on a non-loop edge");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.special) {
      ++offsets_[e.u + 1];
    } else {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  slots_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    slots_[cursor[e.u]++] = {e.v, id};
    if (!e.special) slots_[cursor[e.v]++] = {e.u, id};
  }
}

std::vector<std::size_t> Multigraph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t v = 0; v < n_; ++v) out[v] = offsets_[v + 1] - offsets_[v];
  return out;
}

std::size_t Multigraph::num_special() const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [](const Edge& e) { return e.special; }));
}

Multigraph configuration_match(std::span<const std::uint32_t> degrees, Rng& rng) {
  std::size_t total = 0;
  for (const std::uint32_t d : degrees) total += d;
  if (total % 2 != 0) {
    throw ParityError("configuration_match: degree sum " + std::to_string(total) +
                      " is odd");
  }
  std::vector<Vertex> half_edges;
  half_edges.reserve(total);
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    half_edges.insert(half_edges.end(), degrees[v], static_cast<Vertex>(v));
  }
  // Pairing consecutive entries of a uniform shuffle is a uniform matching.
  shuffle(std::span<Vertex>(half_edges), rng);
  std::vector<Edge> edges;
  edges.reserve(total / 2);
  for (std::size_t i = 0; i < total; i += 2) {
    edges.push_back({half_edges[i], half_edges[i + 1], false});
  }
  return Multigraph(degrees.size(), std::move(edges));
}

std::vector<std::uint32_t> bfs_distances(const Multigraph& g, Vertex source) {
  if (source >= g.num_vertices()) throw std::out_of_range("bfs source");
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const std::uint32_t next = dist[v] + 1;
    for (const auto& slot : g.incident(v)) {
      if (dist[slot.neighbor] == kUnreachable) {
        dist[slot.neighbor] = next;
        queue.push_back(slot.neighbor);
      }
    }
  }
  return dist;
}

Components connected_components(const Multigraph& g) {
  constexpr std::uint32_t kUnlabeled = std::numeric_limits<std::uint32_t>::max();
  Components out;
  out.label.assign(g.num_vertices(), kUnlabeled);
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  for (Vertex start = 0; start < g.num_vertices(); ++start) {
    if (out.label[start] != kUnlabeled) continue;
    const auto id = static_cast<std::uint32_t>(out.size.size());
    queue.clear();
    queue.push_back(start);
    out.label[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& slot : g.incident(queue[head])) {
        if (out.label[slot.neighbor] == kUnlabeled) {
          out.label[slot.neighbor] = id;
          queue.push_back(slot.neighbor);
        }
      }
    }
    out.size.push_back(queue.size());
  }
  return out;
}

std::vector<Vertex> largest_component(const Multigraph& g) {
  const Components comps = connected_components(g);
  if (comps.count() == 0) return {};
  // Components are numbered by smallest vertex, so the first maximum wins ties.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(comps.size.begin(), comps.size.end()) - comps.size.begin());
  std::vector<Vertex> out;
  out.reserve(comps.size[best]);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (comps.label[v] == best) out.push_back(v);
  }
  return out;
}

bool is_connected(const Multigraph& g) {
  return connected_components(g).count() <= 1;
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0 && vertices[i] <= vertices[i - 1]) {
      throw std::invalid_argument("induced_subgraph: vertices must be ascending");
    }
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kNoVertex && local[e.v] != kNoVertex) {
      edges.push_back({local[e.u], local[e.v], e.special});
    }
  }
  return Multigraph(vertices.size(), std::move(edges));
}

void write_edge_list(const Multigraph& g, std::ostream& out) {
  std::string buffer;
  buffer.reserve(1 << 16);
  char num[24];
  auto put = [&](std::uint64_t x) {
    const auto res = std::to_chars(num, num + sizeof num, x);
    buffer.append(num, res.ptr);
  };
  put(g.num_vertices());
  buffer.push_back(' ');
  put(g.num_edges());
  buffer.push_back('\n');
  for (const Edge& e : g.edges()) {
    put(e.u);
    buffer.push_back(' ');
    put(e.v);
    if (e.special) buffer.append(" s");
    buffer.push_back('\n');
    if (buffer.size() > (1 << 16) - 64) {
      out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
    }
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::uint64_t parse_count(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" +
                                  std::string(field) + "'");
  }
  return value;
}

}  // namespace

Multigraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header 'n m'");
  ++line_no;
  auto header = split_fields(line);
  if (header.size() != 2) throw ParseError(line_no, "header must be 'n m'");
  const std::uint64_t n = parse_count(header[0], line_no);
  const std::uint64_t m = parse_count(header[1], line_no);
  if (n >= kNoVertex) throw ParseError(line_no, "vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 26)));
  while (edges.size() < m) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) +
                                        " edges, found " +
                                        std::to_string(edges.size()));
    }
    ++line_no;
    auto fields = split_fields(line);
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError(line_no, "edge line must be 'u v' or 'u u s'");
    }
    const std::uint64_t u = parse_count(fields[0], line_no);
    const std::uint64_t v = parse_count(fields[1], line_no);
    if (u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
    bool special = false;
    if (fields.size() == 3) {
      if (fields[2] != "s") throw ParseError(line_no, "unknown edge flag");
      if (u != v) throw ParseError(line_no, "special flag on a non-loop");
      special = true;
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), special});
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!split_fields(line).empty()) {
      throw ParseError(line_no, "unexpected content after the last edge");
    }
  }
  return Multigraph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace giant
