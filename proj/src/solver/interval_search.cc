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

#include "solver/interval_search.h"

#include <algorithm>
#include <bit>
#include <deque>

namespace icolor::internal {

std::vector<EdgeId> line_graph_bfs_order(const Graph& g) {
  std::vector<EdgeId> order;
  order.reserve(g.size());
  std::vector<bool> seen(g.size(), false);

  std::vector<Vertex> starts(g.order());
  for (Vertex v = 0; v < g.order(); ++v) starts[v] = v;
  std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });

  std::deque<EdgeId> queue;
  for (Vertex s : starts) {
    for (EdgeId e : g.incident(s)) {
      if (seen[e]) continue;
      seen[e] = true;
      queue.push_back(e);
    }
    while (!queue.empty()) {
      EdgeId e = queue.front();
      queue.pop_front();
      order.push_back(e);
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        for (EdgeId f : g.incident(x)) {
          if (!seen[f]) {
            seen[f] = true;
            queue.push_back(f);
          }
        }
      }
    }
  }
  return order;
}

IntervalSearch::IntervalSearch(const Graph& g, int t,
                               const std::vector<EdgeId>& order)
    : g_(g),
      t_(t),
      full_(color_range(1, t)),
      order_(order),
      color_(g.size(), 0),
      vs_(g.order()),
      reach_(g.order(), 0) {
  trail_.reserve(g.size());
  for (Vertex v = 0; v < g.order(); ++v) refresh(v);
}

bool IntervalSearch::refresh(Vertex v) {
  VertexState& s = vs_[v];
  const int d = g_.degree(v);
  const int open = d - s.count;
  if (s.count == 0) {
    s.allowed = full_;
    return d <= t_;
  }
  const int span = s.max - s.min + 1;
  const int holes = span - s.count;
  if (span > d || holes > open) return false;
  if (open == 0) {
    s.allowed = 0;
    return true;
  }
  if (holes == open) {
    s.allowed = color_range(s.min, s.max) & ~s.used;
  } else {
    s.allowed = color_range(std::max(1, s.max - d + 1),
                            std::min(t_, s.min + d - 1)) &
                ~s.used;
  }
  return std::popcount(s.allowed) >= open;
}

bool IntervalSearch::assign(EdgeId e, int c) {
  const Edge& ed = g_.edge(e);
  trail_.push_back({e, vs_[ed.u], vs_[ed.v]});
  color_[e] = c;
  if (c == 1) ++ones_;
  if (c == t_) ++tops_;
  for (Vertex x : {ed.u, ed.v}) {
    VertexState& s = vs_[x];
    s.used |= color_bit(c);
    if (s.count == 0) {
      s.min = s.max = c;
    } else {
      s.min = std::min(s.min, c);
      s.max = std::max(s.max, c);
    }
    ++s.count;
  }
  return refresh(ed.u) && refresh(ed.v);
}

void IntervalSearch::undo() {
  const TrailEntry& entry = trail_.back();
  const Edge& ed = g_.edge(entry.edge);
  const int c = color_[entry.edge];
  if (c == 1) --ones_;
  if (c == t_) --tops_;
  color_[entry.edge] = 0;
  vs_[ed.u] = entry.u;
  vs_[ed.v] = entry.v;
  trail_.pop_back();
}

bool IntervalSearch::replay(const Prefix& prefix) {
  for (auto [e, c] : prefix) {
    if (!assign(e, c)) return false;
  }
  return true;
}

Mask IntervalSearch::root_filter(Mask domain) const {
  return domain & color_range(1, (t_ + 1) / 2);
}

IntervalSearch::Choice IntervalSearch::choose() const {
  Choice choice;
  std::fill(reach_.begin(), reach_.end(), Mask{0});
  Mask any = 0;
  int best = 65;
  for (EdgeId e : order_) {
    if (color_[e] != 0) continue;
    const Edge& ed = g_.edge(e);
    const Mask dom = vs_[ed.u].allowed & vs_[ed.v].allowed;
    if (dom == 0) {
      choice.dead = true;
      return choice;
    }
    reach_[ed.u] |= dom;
    reach_[ed.v] |= dom;
    any |= dom;
    const int count = std::popcount(dom);
    if (count < best) {
      best = count;
      choice.edge = e;
      choice.domain = dom;
    }
  }

  if ((ones_ == 0 && (any & color_bit(1)) == 0) ||
      (tops_ == 0 && (any & color_bit(t_)) == 0)) {
    choice.dead = true;
    return choice;
  }
  if (choice.edge < 0) return choice;

  for (Vertex v = 0; v < g_.order(); ++v) {
    const VertexState& s = vs_[v];
    const int open = g_.degree(v) - s.count;
    if (open == 0) continue;
    if (std::popcount(reach_[v]) < open) {
      choice.dead = true;
      return choice;
    }
    if (s.count > 0) {
      const Mask holes = color_range(s.min, s.max) & ~s.used;
      if ((holes & ~reach_[v]) != 0) {
        choice.dead = true;
        return choice;
      }
    }
  }
  return choice;
}

bool IntervalSearch::dfs(const Budget& budget, const std::atomic<bool>* stop) {
  if ((++nodes_ & 0x3FF) == 0 && budget.expired()) timed_out_ = true;
  if (timed_out_) return false;
  if (stop != nullptr && stop->load(std::memory_order_relaxed)) return false;

  const Choice choice = choose();
  if (choice.dead) return false;
  if (choice.edge < 0) return true;

  const Mask domain =
      depth() == 0 ? root_filter(choice.domain) : choice.domain;
  for (Mask rest = domain; rest != 0; rest &= rest - 1) {
    const int c = std::countr_zero(rest) + 1;
    const bool consistent = assign(choice.edge, c);
    if (consistent && dfs(budget, stop)) return true;
    undo();
    if (timed_out_) return false;
    if (stop != nullptr && stop->load(std::memory_order_relaxed)) return false;
  }
  return false;
}

Decision decide_serial(const Graph& g, int t, const Budget& budget) {
  const std::vector<EdgeId> order = line_graph_bfs_order(g);
  IntervalSearch search(g, t, order);
  Decision decision;
  const bool found = search.dfs(budget, nullptr);
  decision.nodes = search.nodes();
  if (found) {
    decision.outcome = DecideOutcome::kFeasible;
    decision.witness = EdgeColoring{search.colors(), t};
  } else {
    decision.outcome = search.timed_out() ? DecideOutcome::kTimeout
                                          : DecideOutcome::kInfeasible;
  }
  return decision;
}

}  // namespace icolor::internal
