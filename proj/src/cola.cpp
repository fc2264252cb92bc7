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

#include "giant/cola.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "giant/analytic.hpp"
#include "giant/errors.hpp"

namespace giant {

LambdaCell make_cell(double lambda, std::vector<std::vector<double>> positions) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("cell lambda must be finite and non-negative");
  }
  LambdaCell cell;
  cell.lambda = lambda;
  for (Vertex v = 0; v < positions.size(); ++v) {
    auto& list = positions[v];
    std::sort(list.begin(), list.end(), std::greater<>());
    for (const double x : list) {
      if (!(x >= 0.0 && x < lambda)) {
        throw DomainError("clone coordinate outside [0, lambda)");
      }
      cell.positions.push_back(x);
      cell.owner.push_back(v);
    }
    cell.offsets.push_back(cell.positions.size());
  }
  if (cell.positions.size() >= std::numeric_limits<CloneId>::max()) {
    throw SizeError("too many clones");
  }
  return cell;
}

LambdaCell generate_cell(std::size_t n, double lambda, Rng& rng) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("cell lambda must be finite and non-negative");
  }
  LambdaCell cell;
  cell.lambda = lambda;
  cell.offsets.reserve(n + 1);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t first = cell.positions.size();
    const std::uint64_t count = sample_poisson(lambda, rng);
    for (std::uint64_t i = 0; i < count; ++i) {
      cell.positions.push_back(lambda * rng.uniform());
      cell.owner.push_back(v);
    }
    std::sort(cell.positions.begin() + static_cast<std::ptrdiff_t>(first),
              cell.positions.end(), std::greater<>());
    cell.offsets.push_back(cell.positions.size());
  }
  if (cell.positions.size() >= std::numeric_limits<CloneId>::max()) {
    throw SizeError("too many clones");
  }
  designate_special(cell, rng);
  return cell;
}

void designate_special(LambdaCell& cell, Rng& rng) {
  if (cell.special || cell.num_clones() % 2 == 0) return;
  cell.special = static_cast<CloneId>(rng.below(cell.num_clones()));
}

std::pair<double, double> beta_bracket(double lambda) {
  const double theta = lambda > 1.0 ? theta_lambda(lambda) : 0.0;
  return {(1.0 - theta) / 3.0, (1.0 - theta) / 2.0};
}

double default_beta(double lambda) {
  if (!(lambda > 1.0)) return 0.3;
  return beta_bracket(lambda).first;
}

namespace {

class Runner {
 public:
  Runner(const LambdaCell& cell, double beta, Rng& rng)
      : cell_(cell), beta_(beta), rng_(rng) {}

  ColaResult run(bool stop_at_lambda_c);

 private:
  double boundary(std::size_t j) const {
    return cell_.lambda * std::pow(1.0 - beta_, static_cast<double>(j));
  }
  void start_phase();
  void end_phase(CloneId top);
  bool active(CloneId c) const { return !passive_vertex_[cell_.owner[c]]; }
  // Next unmatched clone in sweep order other than `skip`, or C if none.
  std::size_t next_candidate(CloneId skip);
  void match(CloneId top, CloneId hit);
  void release(Vertex v, std::uint32_t removed);
  void push(CloneId c);
  void record_lambda_c();
  bool step2();

  const LambdaCell& cell_;
  const double beta_;
  Rng& rng_;

  std::vector<CloneId> order_;  // sweep order: coordinate descending
  std::vector<char> matched_;
  std::vector<char> passive_vertex_;
  std::vector<std::uint32_t> unmatched_;  // per vertex
  std::vector<CloneId> stack_;
  std::vector<CloneId> pool_;  // unmatched clones once Lambda_C is known
  std::size_t cursor_ = 0;
  std::size_t remaining_ = 0;  // unmatched clones in the matching
  std::size_t phase_ = 0;
  double line_ = 0.0;
  bool have_lambda_c_ = false;
  ColaResult result_;
};

void Runner::start_phase() {
  ++phase_;
  PhaseRecord rec;
  rec.phase = phase_;
  rec.boundary = boundary(phase_);
  const double start = boundary(phase_ - 1);
  const double end = rec.boundary;
  std::int64_t heavy = 0;
  for (Vertex v = 0; v < cell_.num_vertices(); ++v) {
    std::uint32_t left = 0;       // d_v(theta_j)
    std::uint32_t left_next = 0;  // d_v(theta_{j+1})
    std::uint32_t left_unmatched = 0;
    for (std::size_t c = cell_.offsets[v]; c < cell_.offsets[v + 1]; ++c) {
      if (cell_.special && *cell_.special == c) continue;
      const double x = cell_.positions[c];
      if (x < start) {
        ++left;
        if (!matched_[c]) ++left_unmatched;
      }
      if (x < end) ++left_next;
    }
    passive_vertex_[v] = (left == 2 && left_unmatched == 2) ? 1 : 0;
    if (left > 2) heavy += left;
    if (left_next == 2 && left > left_next) ++rec.transitions;
    if (passive_vertex_[v]) {
      rec.passive += unmatched_[v];
    } else {
      rec.active += unmatched_[v];
    }
  }
  rec.light_lower = static_cast<std::int64_t>(rec.active) - heavy;
  rec.stack_depth_max = stack_.size();
  result_.trace.push_back(rec);
}

void Runner::end_phase(CloneId top) {
  result_.trace.back().passive_on_top = !active(top);
  line_ = result_.trace.back().boundary;
}

std::size_t Runner::next_candidate(CloneId skip) {
  const std::size_t total = order_.size();
  while (cursor_ < total && matched_[order_[cursor_]]) ++cursor_;
  std::size_t k = cursor_;
  while (k < total && (matched_[order_[k]] || order_[k] == skip)) ++k;
  return k;
}

void Runner::push(CloneId c) {
  stack_.push_back(c);
  auto& depth = result_.trace.back().stack_depth_max;
  depth = std::max(depth, stack_.size());
}

// After `removed` clones of v were matched, pushes v's last unmatched clone if
// v just became light.
void Runner::release(Vertex v, std::uint32_t removed) {
  const std::uint32_t before = unmatched_[v];
  unmatched_[v] -= removed;
  if (before >= 2 && unmatched_[v] == 1) {
    for (std::size_t c = cell_.offsets[v]; c < cell_.offsets[v + 1]; ++c) {
      if (!matched_[c]) {
        push(static_cast<CloneId>(c));
        break;
      }
    }
  }
}

void Runner::match(CloneId top, CloneId hit) {
  PhaseRecord& rec = result_.trace.back();
  rec.matched_active += active(top) ? 1 : 0;
  rec.matched_active += active(hit) ? 1 : 0;
  matched_[top] = 1;
  matched_[hit] = 1;
  remaining_ -= 2;
  line_ = cell_.positions[hit];
  result_.matching.emplace_back(top, hit);
  result_.match_positions.push_back(line_);
  const Vertex u = cell_.owner[top];
  const Vertex v = cell_.owner[hit];
  if (u == v) {
    release(u, 2);
  } else {
    release(u, 1);
    release(v, 1);
  }
}

void Runner::record_lambda_c() {
  have_lambda_c_ = true;
  result_.lambda_c = line_;
  result_.lambda_c_phase = phase_;
  for (CloneId c = 0; c < cell_.num_clones(); ++c) {
    if (!matched_[c]) result_.unmatched_at_lambda_c.push_back(c);
  }
  pool_ = result_.unmatched_at_lambda_c;
}

// Pushes a uniformly chosen unmatched active clone; falls back to any
// unmatched clone when only passive ones remain. False when nothing is left.
bool Runner::step2() {
  if (remaining_ == 0) return false;
  std::erase_if(pool_, [this](CloneId c) { return matched_[c] != 0; });
  std::vector<CloneId> candidates;
  for (const CloneId c : pool_) {
    if (active(c)) candidates.push_back(c);
  }
  result_.trace.back().step2 = true;
  if (candidates.empty()) {
    ++result_.completion_pushes;
    push(pool_[rng_.below(pool_.size())]);
  } else {
    ++result_.step2_choices;
    push(candidates[rng_.below(candidates.size())]);
  }
  return true;
}

ColaResult Runner::run(bool stop_at_lambda_c) {
  const std::size_t n = cell_.num_vertices();
  const std::size_t total = cell_.num_clones();
  result_.special = cell_.special;
  matched_.assign(total, 0);
  passive_vertex_.assign(n, 0);
  unmatched_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    unmatched_[v] = static_cast<std::uint32_t>(cell_.count(v));
  }
  if (cell_.special) {
    matched_[*cell_.special] = 1;
    --unmatched_[cell_.owner[*cell_.special]];
  }
  remaining_ = total - (cell_.special ? 1 : 0);

  order_.resize(total);
  std::iota(order_.begin(), order_.end(), CloneId{0});
  std::sort(order_.begin(), order_.end(), [this](CloneId a, CloneId b) {
    const double xa = cell_.positions[a];
    const double xb = cell_.positions[b];
    return xa > xb || (xa == xb && a < b);
  });

  line_ = cell_.lambda;
  start_phase();
  // Initial stack in (vertex, clone index) order; the last pushed is on top.
  for (Vertex v = 0; v < n; ++v) {
    if (unmatched_[v] != 1) continue;
    for (std::size_t c = cell_.offsets[v]; c < cell_.offsets[v + 1]; ++c) {
      if (!matched_[c]) push(static_cast<CloneId>(c));
    }
  }

  while (true) {
    // Step 1.
    while (true) {
      while (!stack_.empty() && matched_[stack_.back()]) stack_.pop_back();
      if (stack_.empty()) break;
      const CloneId top = stack_.back();
      const std::size_t k = next_candidate(top);
      if (k == total) {
        throw std::logic_error("cut-off line: unmatched clone without partner");
      }
      const CloneId hit = order_[k];
      while (cell_.positions[hit] < result_.trace.back().boundary) {
        end_phase(top);
        start_phase();
      }
      stack_.pop_back();
      match(top, hit);
    }
    // Step 2.
    if (!have_lambda_c_) {
      record_lambda_c();
      if (stop_at_lambda_c) return std::move(result_);
    }
    if (!step2()) break;
  }
  result_.completed = true;
  return std::move(result_);
}

}  // namespace

ColaResult run_cola(const LambdaCell& cell, double beta, bool stop_at_lambda_c,
                    Rng& rng) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("beta must lie in (0, 1), got " + std::to_string(beta));
  }
  if (cell.num_clones() % 2 == 1 && !cell.special) {
    LambdaCell copy = cell;
    designate_special(copy, rng);
    return Runner(copy, beta, rng).run(stop_at_lambda_c);
  }
  return Runner(cell, beta, rng).run(stop_at_lambda_c);
}

bool lambda_c_invariance_check(const LambdaCell& cell, std::span<const double> betas) {
  if (betas.empty()) return true;
  std::optional<double> first;
  for (const double beta : betas) {
    Rng rng(0);
    const double value = run_cola(cell, beta, true, rng).lambda_c;
    if (!first) {
      first = value;
    } else if (value != *first) {
      return false;
    }
  }
  return true;
}

Multigraph cola_multigraph(const LambdaCell& cell, const ColaResult& result,
                           bool include_special) {
  std::vector<Edge> edges;
  edges.reserve(result.matching.size() + 1);
  for (const auto& [a, b] : result.matching) {
    edges.push_back({cell.owner[a], cell.owner[b], false});
  }
  if (include_special && result.special) {
    const Vertex v = cell.owner[*result.special];
    edges.push_back({v, v, true});
  }
  return Multigraph(cell.num_vertices(), std::move(edges));
}

std::vector<Vertex> core_from_lambda_c(const LambdaCell& cell, const ColaResult& result) {
  std::vector<std::uint32_t> count(cell.num_vertices(), 0);
  for (const CloneId c : result.unmatched_at_lambda_c) ++count[cell.owner[c]];
  std::vector<Vertex> core;
  for (Vertex v = 0; v < cell.num_vertices(); ++v) {
    if (count[v] >= 2) core.push_back(v);
  }
  return core;
}

void write_trace_csv(std::span<const PhaseRecord> trace, std::ostream& out) {
  out << "phase,boundary,N_j,L_j_lower,M_j,B_j,stack_depth_max\n";
  char buf[64];
  for (const PhaseRecord& rec : trace) {
    std::snprintf(buf, sizeof buf, "%.17g", rec.boundary);
    out << rec.phase << ',' << buf << ',' << rec.active << ',' << rec.light_lower
        << ',' << rec.matched_active << ',' << rec.transitions << ','
        << rec.stack_depth_max << '\n';
  }
}

}  // namespace giant
