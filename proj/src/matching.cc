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

#include "icolor/matching.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace icolor {
namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const Graph& g, std::span<const int> side,
               const std::vector<bool>& usable)
      : g_(g),
        side_(side),
        usable_(usable),
        mate_(g.order(), -1),
        dist_(g.order(), kInf) {}

  std::vector<EdgeId> run() {
    while (bfs()) {
      for (Vertex x = 0; x < g_.order(); ++x) {
        if (side_[x] == 0 && mate_[x] < 0) dfs(x);
      }
    }
    std::vector<EdgeId> matched;
    for (Vertex x = 0; x < g_.order(); ++x) {
      if (side_[x] == 0 && mate_[x] >= 0) matched.push_back(mate_[x]);
    }
    std::sort(matched.begin(), matched.end());
    return matched;
  }

 private:
  bool usable(EdgeId e) const { return usable_.empty() || usable_[e]; }

  // Layers free left vertices at 0 and alternates unmatched/matched edges.
  bool bfs() {
    std::deque<Vertex> queue;
    for (Vertex x = 0; x < g_.order(); ++x) {
      if (side_[x] != 0) continue;
      dist_[x] = mate_[x] < 0 ? 0 : kInf;
      if (mate_[x] < 0) queue.push_back(x);
    }
    bool reached_free = false;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (EdgeId e : g_.incident(x)) {
        if (!usable(e)) continue;
        Vertex y = g_.other(e, x);
        if (mate_[y] < 0) {
          reached_free = true;
          continue;
        }
        Vertex next = g_.other(mate_[y], y);
        if (dist_[next] == kInf) {
          dist_[next] = dist_[x] + 1;
          queue.push_back(next);
        }
      }
    }
    return reached_free;
  }

  bool dfs(Vertex x) {
    for (EdgeId e : g_.incident(x)) {
      if (!usable(e)) continue;
      Vertex y = g_.other(e, x);
      bool advance = mate_[y] < 0;
      if (!advance) {
        Vertex next = g_.other(mate_[y], y);
        advance = dist_[next] == dist_[x] + 1 && dfs(next);
      }
      if (advance) {
        mate_[x] = e;
        mate_[y] = e;
        return true;
      }
    }
    dist_[x] = kInf;
    return false;
  }

  const Graph& g_;
  std::span<const int> side_;
  const std::vector<bool>& usable_;
  std::vector<EdgeId> mate_;  // matched edge id per vertex
  std::vector<int> dist_;
};

}  // namespace

std::vector<EdgeId> maximum_bipartite_matching(
    const Graph& g, std::span<const int> side,
    const std::vector<bool>& usable) {
  if (static_cast<int>(side.size()) != g.order()) {
    throw Error("side vector does not match vertex count");
  }
  return HopcroftKarp(g, side, usable).run();
}

std::vector<std::vector<EdgeId>> konig_decompose(const Graph& b) {
  auto side = bipartition(b);
  if (!side) throw Error("konig_decompose: " + b.name() + " is not bipartite");
  auto r = regular_degree(b);
  if (!r) throw Error("konig_decompose: " + b.name() + " is not regular");

  std::vector<bool> usable(b.size(), true);
  std::vector<std::vector<EdgeId>> matchings;
  matchings.reserve(*r);
  const std::size_t perfect = static_cast<std::size_t>(b.order()) / 2;
  for (int k = 0; k < *r; ++k) {
    auto m = maximum_bipartite_matching(b, *side, usable);
    if (m.size() != perfect) {
      throw Error("konig_decompose: no perfect matching left in round " +
                  std::to_string(k));
    }
    for (EdgeId e : m) usable[e] = false;
    matchings.push_back(std::move(m));
  }
  return matchings;
}

}  // namespace icolor
