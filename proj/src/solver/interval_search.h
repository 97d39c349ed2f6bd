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

#ifndef ICOLOR_SOLVER_INTERVAL_SEARCH_H_
#define ICOLOR_SOLVER_INTERVAL_SEARCH_H_

#include <atomic>
#include <cstdint>
#include <utility>
#include <vector>

#include "icolor/budget.h"
#include "icolor/graph.h"
#include "icolor/solver.h"

namespace icolor::internal {

using Mask = std::uint64_t;

inline Mask color_bit(int c) { return Mask{1} << (c - 1); }

// Bits for colors lo..hi inclusive; empty when lo > hi.
inline Mask color_range(int lo, int hi) {
  if (lo > hi) return 0;
  const Mask upto_hi = hi >= 64 ? ~Mask{0} : (Mask{1} << hi) - 1;
  const Mask below_lo = (Mask{1} << (lo - 1)) - 1;
  return upto_hi & ~below_lo;
}

using Assignment = std::pair<EdgeId, int>;
using Prefix = std::vector<Assignment>;

// Edges in BFS order over the line graph, starting at the edges of the
// lowest-numbered maximum-degree vertex. Used as the branching tie-break.
std::vector<EdgeId> line_graph_bfs_order(const Graph& g);

// Backtracking state for "does g have an interval t-coloring".
//
// Each vertex keeps the colors on its assigned edges (bitmask, count, min,
// max). The colors still open to its unassigned edges are the window
// [max - d + 1, min + d - 1] clipped to 1..t, minus used colors; when the
// holes inside [min, max] equal the number of unassigned edges, only those
// holes remain. An edge's domain is the intersection of its endpoint
// windows.
class IntervalSearch {
 public:
  IntervalSearch(const Graph& g, int t, const std::vector<EdgeId>& order);

  struct Choice {
    bool dead = false;
    EdgeId edge = -1;  // -1 with !dead: every edge is colored
    Mask domain = 0;
  };

  // Fail-first: the unassigned edge with the smallest domain, ties broken
  // by `order`. Also runs the per-vertex Hall and global color 1/t checks.
  Choice choose() const;

  // Colors e with c; false means an endpoint became inconsistent. Either
  // way the assignment is on the trail and must be undone.
  bool assign(EdgeId e, int c);
  void undo();
  int depth() const { return static_cast<int>(trail_.size()); }

  // Replays a prefix from the root; false if any step is inconsistent.
  bool replay(const Prefix& prefix);

  // Domain restriction at the root for the reversal symmetry c -> t+1-c.
  Mask root_filter(Mask domain) const;

  // Depth-first search from the current state. Stops when `stop` is raised
  // by another worker or the budget expires.
  bool dfs(const Budget& budget, const std::atomic<bool>* stop);

  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<int> colors() const { return color_; }
  int t() const { return t_; }

 private:
  struct VertexState {
    Mask used = 0;
    int count = 0;
    int min = 0;
    int max = 0;
    Mask allowed = 0;
  };
  struct TrailEntry {
    EdgeId edge;
    VertexState u;
    VertexState v;
  };

  // Recomputes allowed for v; false if v can no longer be completed.
  bool refresh(Vertex v);

  const Graph& g_;
  int t_;
  Mask full_;
  const std::vector<EdgeId>& order_;
  std::vector<int> color_;
  std::vector<VertexState> vs_;
  std::vector<TrailEntry> trail_;
  int ones_ = 0;   // edges colored 1
  int tops_ = 0;   // edges colored t
  mutable std::vector<Mask> reach_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

// Serial reference kernel.
Decision decide_serial(const Graph& g, int t, const Budget& budget);

// OpenMP kernel: expands the tree to a frontier of prefixes and hands the
// subtrees to workers. Same verdicts as decide_serial.
Decision decide_parallel(const Graph& g, int t, const Budget& budget);

}  // namespace icolor::internal

#endif  // ICOLOR_SOLVER_INTERVAL_SEARCH_H_
