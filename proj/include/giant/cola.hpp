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

// Poisson lambda-cells and the cut-off line matching procedure.
//
// A cell assigns every vertex a Po(lambda) number of clones, each carrying a
// uniform coordinate in [0, lambda). A vertical line starts at lambda and only
// moves left. Light clones (their vertex has at most one unmatched clone) sit
// on a stack; the top is matched to the next unmatched clone the line hits.
// Phase j ends when the line reaches (1 - beta)^j lambda. The line position at
// the first moment the stack is empty is Lambda_C, and the clones unmatched at
// that moment are exactly the 2-core.

#ifndef GIANT_COLA_HPP_
#define GIANT_COLA_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "giant/multigraph.hpp"
#include "giant/random.hpp"

namespace giant {

using CloneId = std::uint32_t;

struct CloneRef {
  Vertex vertex;
  std::uint32_t index;  // rank within the vertex, 0 = rightmost
};

struct LambdaCell {
  double lambda = 0.0;
  std::vector<std::size_t> offsets{0};  // clones of v: [offsets[v], offsets[v+1])
  std::vector<double> positions;        // descending within each vertex
  std::vector<Vertex> owner;            // vertex of each clone
  // Clone turned into a special loop because the total count is odd. It is
  // excluded from the matching.
  std::optional<CloneId> special;

  std::size_t num_vertices() const { return offsets.size() - 1; }
  std::size_t num_clones() const { return positions.size(); }
  std::size_t count(Vertex v) const { return offsets[v + 1] - offsets[v]; }
  CloneRef ref(CloneId c) const {
    return {owner[c], static_cast<std::uint32_t>(c - offsets[owner[c]])};
  }
};

// Draws a cell; an odd clone total gets a uniformly chosen special clone.
LambdaCell generate_cell(std::size_t n, double lambda, Rng& rng);

// Builds a cell from explicit per-vertex coordinates (tests, replays).
LambdaCell make_cell(double lambda, std::vector<std::vector<double>> positions);

// Picks the special clone of an odd cell if none is set yet.
void designate_special(LambdaCell& cell, Rng& rng);

struct PhaseRecord {
  std::size_t phase = 0;    // j >= 1
  double boundary = 0.0;    // (1 - beta)^j lambda, where the phase ends
  std::size_t active = 0;   // N_j: unmatched j-active clones at phase start
  std::size_t passive = 0;  // unmatched j-passive clones at phase start
  std::int64_t light_lower = 0;  // L_j = N_j - H_j
  std::size_t matched_active = 0;  // M_j
  std::size_t transitions = 0;     // B_j
  std::size_t stack_depth_max = 0;
  bool passive_on_top = false;  // A_j: phase ended with a passive stack top
  bool step2 = false;           // the uniform-choice step ran in this phase
};

struct ColaResult {
  double lambda_c = 0.0;
  std::vector<std::pair<CloneId, CloneId>> matching;
  std::vector<double> match_positions;  // line coordinate of each match
  std::optional<CloneId> special;
  std::vector<PhaseRecord> trace;
  std::vector<CloneId> unmatched_at_lambda_c;  // ascending
  std::size_t lambda_c_phase = 0;   // phase in which Lambda_C was reached
  std::size_t step2_choices = 0;    // uniform active-clone pushes
  std::size_t completion_pushes = 0;  // pushes with only passive clones left
  bool completed = false;
};

// (1 - theta_lambda) / 3; beta = 0.3 when lambda <= 1.
double default_beta(double lambda);
// The admissible interval [(1 - theta)/3, (1 - theta)/2].
std::pair<double, double> beta_bracket(double lambda);

// Runs the procedure on `cell` with phase ratio beta in (0, 1). `rng` feeds
// only the uniform choices made after Lambda_C (and the special clone if the
// cell has none yet), so Lambda_C is a function of the cell alone.
ColaResult run_cola(const LambdaCell& cell, double beta, bool stop_at_lambda_c,
                    Rng& rng);

// True iff Lambda_C agrees exactly across all betas.
bool lambda_c_invariance_check(const LambdaCell& cell, std::span<const double> betas);

// Contracts the matched pairs into edges; the special clone, if any, becomes a
// special loop when `include_special` is set.
Multigraph cola_multigraph(const LambdaCell& cell, const ColaResult& result,
                           bool include_special = false);

// Vertices holding at least two of the clones unmatched at Lambda_C.
std::vector<Vertex> core_from_lambda_c(const LambdaCell& cell, const ColaResult& result);

// Header: phase,boundary,N_j,L_j_lower,M_j,B_j,stack_depth_max
void write_trace_csv(std::span<const PhaseRecord> trace, std::ostream& out);

}  // namespace giant

#endif  // GIANT_COLA_HPP_
