// Copyright 2026 The icolor Authors
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

#ifndef ICOLOR_SOLVER_H_
#define ICOLOR_SOLVER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "icolor/budget.h"
#include "icolor/coloring.h"
#include "icolor/graph.h"

namespace icolor {

// Upper bound on W(G) for connected G in R:
//   bipartite:  d(G)(Delta(G) - 1) + 1
//   otherwise:  (d(G) + 1)(Delta(G) - 1) + 1
// Throws Error on disconnected input.
int theorem2_upper(const Graph& g);

enum class SearchMode {
  kSerial,    // single-threaded reference search
  kParallel,  // root subtrees explored by OpenMP workers
};

enum class DecideOutcome { kFeasible, kInfeasible, kTimeout };

struct Decision {
  DecideOutcome outcome = DecideOutcome::kInfeasible;
  std::optional<EdgeColoring> witness;  // set iff kFeasible
  std::uint64_t nodes = 0;
};

inline constexpr double kDecideTimeboxSeconds = 60.0;
inline constexpr double kSummaryTimeboxSeconds = 300.0;
inline constexpr int kSummaryMaxEdges = 40;
inline constexpr int kMaxSearchColors = 64;

// Decides whether connected g has an interval t-coloring. kInfeasible is
// only returned after a completed search. Throws Error on disconnected
// input or t outside 1..64 (t above |E| is answered without search).
Decision decide_t(const Graph& g, int t, const Budget& budget,
                  SearchMode mode = SearchMode::kParallel);
Decision decide_t(const Graph& g, int t,
                  double timebox_seconds = kDecideTimeboxSeconds,
                  SearchMode mode = SearchMode::kParallel);

struct SolverOptions {
  double timebox_seconds = kSummaryTimeboxSeconds;
  int max_edges = kSummaryMaxEdges;
  SearchMode mode = SearchMode::kParallel;
  const std::atomic<bool>* cancel = nullptr;
};

struct IntervalSummary {
  bool member = false;
  std::optional<int> w;
  std::optional<int> W;
  std::set<int> feasible_t;
  std::map<int, EdgeColoring> witnesses;
  // t values whose search timed out; non-empty means the summary is partial.
  std::set<int> timed_out;
  int search_floor = 0;    // Delta(G)
  int search_ceiling = 0;  // theorem2_upper(G)
  std::string certificate;

  bool inconclusive() const { return !timed_out.empty(); }
};

// Runs decide_t for every t in [Delta, theorem2_upper]. Throws
// SizeGuardError above options.max_edges.
IntervalSummary summary(const Graph& g, const SolverOptions& options = {});

struct Extremum {
  DecideOutcome outcome = DecideOutcome::kInfeasible;  // kFeasible: value set
  std::optional<int> value;
  std::optional<EdgeColoring> witness;
};

// Upward scan from Delta; kInfeasible means g is not in R.
Extremum least_w(const Graph& g, const SolverOptions& options = {});
// Downward scan from theorem2_upper; kInfeasible means g is not in R.
Extremum greatest_W(const Graph& g, const SolverOptions& options = {});

}  // namespace icolor

#endif  // ICOLOR_SOLVER_H_
