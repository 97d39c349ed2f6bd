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

#include "icolor/chromatic.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace icolor {
namespace {

using Mask = std::uint64_t;

class ProperSearch {
 public:
  ProperSearch(const Graph& g, int k, const Budget& budget,
               std::uint64_t node_limit)
      : g_(g),
        full_(k == 64 ? ~Mask{0} : (Mask{1} << k) - 1),
        budget_(budget),
        node_limit_(node_limit),
        used_(g.order(), 0),
        open_(g.order(), 0),
        color_(g.size(), 0),
        order_(g.size()) {
    for (Vertex v = 0; v < g.order(); ++v) open_[v] = g.degree(v);
    // Static tie-break: heavier edges first.
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
      return weight(a) > weight(b);
    });
  }

  void shuffle_ties(std::mt19937_64& rng) {
    std::shuffle(order_.begin(), order_.end(), rng);
  }

  bool hit_limit() const { return hit_limit_; }

  ProperColoringResult run() {
    ProperColoringResult result;
    const bool found = dfs(0);
    result.nodes = nodes_;
    if (found) {
      result.status = SearchStatus::kFound;
      result.coloring = EdgeColoring{color_, std::nullopt};
    } else {
      result.status =
          timed_out_ ? SearchStatus::kTimeout : SearchStatus::kExhausted;
    }
    return result;
  }

 private:
  int weight(EdgeId e) const {
    return g_.degree(g_.edge(e).u) + g_.degree(g_.edge(e).v);
  }

  bool dfs(int highest) {
    if ((++nodes_ & 0xFFF) == 0 && budget_.expired()) timed_out_ = true;
    if (nodes_ > node_limit_) hit_limit_ = true;
    if (timed_out_ || hit_limit_) return false;

    EdgeId best = -1;
    Mask best_free = 0;
    int best_count = 65;
    int best_open = -1;
    for (EdgeId e : order_) {
      if (color_[e] != 0) continue;
      const Edge& ed = g_.edge(e);
      const Mask free = full_ & ~(used_[ed.u] | used_[ed.v]);
      const int count = std::popcount(free);
      if (count == 0) return false;
      const int open = open_[ed.u] + open_[ed.v];
      if (count < best_count || (count == best_count && open > best_open)) {
        best = e;
        best_free = free;
        best_count = count;
        best_open = open;
      }
    }
    if (best < 0) return true;

    const Edge& ed = g_.edge(best);
    for (Mask rest = best_free; rest != 0; rest &= rest - 1) {
      const int c = std::countr_zero(rest) + 1;
      if (c > highest + 1) break;
      const Mask bit = Mask{1} << (c - 1);
      color_[best] = c;
      used_[ed.u] |= bit;
      used_[ed.v] |= bit;
      --open_[ed.u];
      --open_[ed.v];
      const bool ok = dfs(std::max(highest, c));
      ++open_[ed.u];
      ++open_[ed.v];
      used_[ed.u] &= ~bit;
      used_[ed.v] &= ~bit;
      if (ok) return true;
      color_[best] = 0;
      if (timed_out_ || hit_limit_) return false;
    }
    return false;
  }

  const Graph& g_;
  Mask full_;
  const Budget& budget_;
  std::uint64_t node_limit_;
  std::vector<Mask> used_;
  std::vector<int> open_;
  std::vector<int> color_;
  std::vector<EdgeId> order_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  bool hit_limit_ = false;
};

constexpr std::uint64_t kNoLimit = ~std::uint64_t{0};

}  // namespace

ProperColoringResult find_proper_coloring(const Graph& g, int k,
                                          const Budget& budget,
                                          const ProperSearchOptions& options) {
  if (k < 0 || k > 64) throw Error("color count must be in 0..64");
  if (g.size() == 0) {
    return {SearchStatus::kFound, EdgeColoring{}, 0};
  }
  if (k < max_degree(g)) return {SearchStatus::kExhausted, std::nullopt, 0};
  if (budget.expired()) return {SearchStatus::kTimeout, std::nullopt, 0};
  if (!options.restart_seed) return ProperSearch(g, k, budget, kNoLimit).run();

  std::uint64_t limit = std::max<std::uint64_t>(1, options.initial_node_limit);
  std::uint64_t total = 0;
  for (std::uint64_t run = 0;; ++run) {
    ProperSearch search(g, k, budget, limit);
    if (run > 0) {
      std::seed_seq seq{*options.restart_seed, run};
      std::mt19937_64 rng(seq);
      search.shuffle_ties(rng);
    }
    ProperColoringResult result = search.run();
    total += result.nodes;
    if (!search.hit_limit()) {
      result.nodes = total;
      return result;
    }
    // Grow by 1.5x every 16 runs.
    if (run % 16 == 15) limit += limit / 2;
  }
}

int chromatic_index(const Graph& g, int max_edges) {
  if (g.size() > max_edges) {
    throw SizeGuardError("chromatic_index: " + std::to_string(g.size()) +
                         " edges exceeds guard of " +
                         std::to_string(max_edges));
  }
  const int delta = max_degree(g);
  if (g.size() == 0) return 0;
  auto result = find_proper_coloring(g, delta);
  return result.status == SearchStatus::kFound ? delta : delta + 1;
}

}  // namespace icolor
