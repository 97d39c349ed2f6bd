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

#include "icolor/solver.h"

#include <algorithm>
#include <string>

#include "solver/interval_search.h"

namespace icolor {
namespace {

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) {
    throw Error(std::string(op) + ": graph " + g.name() + " is disconnected");
  }
}

void require_guard(const Graph& g, const SolverOptions& options) {
  if (g.size() > options.max_edges) {
    throw SizeGuardError(g.name() + " has " + std::to_string(g.size()) +
                         " edges, above the exact-search guard of " +
                         std::to_string(options.max_edges));
  }
}

Budget budget_for(const SolverOptions& options) {
  Budget b = Budget::seconds(options.timebox_seconds);
  b.with_cancel(options.cancel);
  return b;
}

Extremum only(DecideOutcome outcome) {
  Extremum e;
  e.outcome = outcome;
  return e;
}

}  // namespace

int theorem2_upper(const Graph& g) {
  require_connected(g, "theorem2_upper");
  const GraphStats s = stats(g);
  const int d = *s.diameter;
  const int delta = s.max_degree;
  return s.bipartite ? d * (delta - 1) + 1 : (d + 1) * (delta - 1) + 1;
}

Decision decide_t(const Graph& g, int t, const Budget& budget,
                  SearchMode mode) {
  require_connected(g, "decide_t");
  if (t < 1) throw Error("decide_t: t must be >= 1");
  // Every color 1..t needs its own edge, and some vertex sees Delta colors.
  if (t > g.size() || t < max_degree(g)) return Decision{};
  if (t > kMaxSearchColors) {
    throw SizeGuardError("decide_t: t=" + std::to_string(t) +
                         " exceeds the 64-color search limit");
  }
  if (budget.expired()) {
    Decision d;
    d.outcome = DecideOutcome::kTimeout;
    return d;
  }
  return mode == SearchMode::kSerial ? internal::decide_serial(g, t, budget)
                                     : internal::decide_parallel(g, t, budget);
}

Decision decide_t(const Graph& g, int t, double timebox_seconds,
                  SearchMode mode) {
  return decide_t(g, t, Budget::seconds(timebox_seconds), mode);
}

IntervalSummary summary(const Graph& g, const SolverOptions& options) {
  require_connected(g, "summary");
  require_guard(g, options);
  const Budget budget = budget_for(options);

  IntervalSummary result;
  result.search_floor = max_degree(g);
  result.search_ceiling = theorem2_upper(g);
  for (int t = result.search_floor; t <= result.search_ceiling; ++t) {
    Decision d = decide_t(g, t, budget, options.mode);
    switch (d.outcome) {
      case DecideOutcome::kFeasible:
        result.feasible_t.insert(t);
        result.witnesses.emplace(t, std::move(*d.witness));
        break;
      case DecideOutcome::kTimeout:
        result.timed_out.insert(t);
        break;
      case DecideOutcome::kInfeasible:
        break;
    }
  }

  result.member = !result.feasible_t.empty();
  if (result.member) {
    result.w = *result.feasible_t.begin();
    result.W = *result.feasible_t.rbegin();
  }
  const std::string range = "[" + std::to_string(result.search_floor) + ", " +
                            std::to_string(result.search_ceiling) + "]";
  if (result.inconclusive()) {
    result.certificate = "inconclusive: " +
                         std::to_string(result.timed_out.size()) +
                         " value(s) of t in " + range + " timed out";
  } else if (result.member) {
    result.certificate = "every t in " + range +
                         " decided; values above the diameter ceiling are "
                         "impossible for members";
  } else {
    result.certificate = "exhausted every t in " + range +
                         " without an interval coloring; the diameter "
                         "ceiling bounds W for members, so the graph is not "
                         "interval colorable";
  }
  return result;
}

Extremum least_w(const Graph& g, const SolverOptions& options) {
  require_connected(g, "least_w");
  require_guard(g, options);
  const Budget budget = budget_for(options);
  const int ceiling = theorem2_upper(g);
  for (int t = max_degree(g); t <= ceiling; ++t) {
    Decision d = decide_t(g, t, budget, options.mode);
    if (d.outcome == DecideOutcome::kTimeout) {
      return only(DecideOutcome::kTimeout);
    }
    if (d.outcome == DecideOutcome::kFeasible) {
      return {DecideOutcome::kFeasible, t, std::move(d.witness)};
    }
  }
  return only(DecideOutcome::kInfeasible);
}

Extremum greatest_W(const Graph& g, const SolverOptions& options) {
  require_connected(g, "greatest_W");
  require_guard(g, options);
  const Budget budget = budget_for(options);
  const int ceiling = std::min(theorem2_upper(g), g.size());
  for (int t = ceiling; t >= max_degree(g) && t >= 1; --t) {
    Decision d = decide_t(g, t, budget, options.mode);
    if (d.outcome == DecideOutcome::kTimeout) {
      return only(DecideOutcome::kTimeout);
    }
    if (d.outcome == DecideOutcome::kFeasible) {
      return {DecideOutcome::kFeasible, t, std::move(d.witness)};
    }
  }
  return only(DecideOutcome::kInfeasible);
}

}  // namespace icolor
