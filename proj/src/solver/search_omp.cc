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

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>

#include "solver/interval_search.h"

namespace icolor::internal {
namespace {

constexpr int kMaxFrontierLevels = 6;

struct Frontier {
  std::vector<Prefix> prefixes;
  std::optional<std::vector<int>> solution;  // found while expanding
  std::uint64_t nodes = 0;
};

// Breadth-first expansion of the serial tree, level by level, until there
// are enough subtrees to keep every worker busy.
Frontier expand(const Graph& g, int t, const std::vector<EdgeId>& order,
                std::size_t target) {
  Frontier frontier;
  frontier.prefixes.push_back({});
  for (int level = 0; level < kMaxFrontierLevels; ++level) {
    if (frontier.prefixes.size() >= target) break;
    std::vector<Prefix> next;
    for (const Prefix& prefix : frontier.prefixes) {
      IntervalSearch search(g, t, order);
      search.replay(prefix);
      ++frontier.nodes;
      const IntervalSearch::Choice choice = search.choose();
      if (choice.dead) continue;
      if (choice.edge < 0) {
        frontier.solution = search.colors();
        return frontier;
      }
      const Mask domain = prefix.empty() ? search.root_filter(choice.domain)
                                         : choice.domain;
      for (Mask rest = domain; rest != 0; rest &= rest - 1) {
        const int c = std::countr_zero(rest) + 1;
        if (search.assign(choice.edge, c)) {
          Prefix child = prefix;
          child.emplace_back(choice.edge, c);
          next.push_back(std::move(child));
        }
        search.undo();
      }
    }
    frontier.prefixes = std::move(next);
    if (frontier.prefixes.empty()) break;
  }
  return frontier;
}

}  // namespace

Decision decide_parallel(const Graph& g, int t, const Budget& budget) {
  const std::vector<EdgeId> order = line_graph_bfs_order(g);
  const std::size_t target =
      16 * static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  Frontier frontier = expand(g, t, order, target);

  Decision decision;
  decision.nodes = frontier.nodes;
  if (frontier.solution) {
    decision.outcome = DecideOutcome::kFeasible;
    decision.witness = EdgeColoring{*frontier.solution, t};
    return decision;
  }

  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> nodes{0};
  std::optional<std::vector<int>> witness;
  const auto count = static_cast<std::int64_t>(frontier.prefixes.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    if (stop.load(std::memory_order_relaxed)) continue;
    IntervalSearch search(g, t, order);
    search.replay(frontier.prefixes[i]);
    if (search.dfs(budget, &stop)) {
#pragma omp critical(icolor_witness)
      {
        if (!witness) witness = search.colors();
      }
      stop.store(true, std::memory_order_relaxed);
    } else if (search.timed_out()) {
      timed_out.store(true, std::memory_order_relaxed);
      stop.store(true, std::memory_order_relaxed);
    }
    nodes.fetch_add(search.nodes(), std::memory_order_relaxed);
  }

  decision.nodes += nodes.load();
  if (witness) {
    decision.outcome = DecideOutcome::kFeasible;
    decision.witness = EdgeColoring{*witness, t};
  } else if (timed_out.load()) {
    decision.outcome = DecideOutcome::kTimeout;
  } else {
    decision.outcome = DecideOutcome::kInfeasible;
  }
  return decision;
}

}  // namespace icolor::internal
