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


#include <gtest/gtest.h>

#include <atomic>
#include <random>

#include "icolor/chromatic.h"
#include "icolor/families.h"
#include "icolor/products.h"
#include "icolor/solver.h"
#include "oracles.h"

namespace icolor {
namespace {

constexpr SearchMode kModes[] = {SearchMode::kSerial, SearchMode::kParallel};

TEST(Theorem2Upper, Examples) {
  EXPECT_EQ(theorem2_upper(petersen_graph()), 7);
  EXPECT_EQ(theorem2_upper(hypercube_graph(3)), 7);
  EXPECT_EQ(theorem2_upper(complete_graph(4)), 5);
  EXPECT_THROW(theorem2_upper(empty_graph(2)), Error);
}

TEST(DecideT, FourCycleTwoColors) {
  for (SearchMode mode : kModes) {
    const Decision d = decide_t(cycle_graph(4), 2, 60, mode);
    ASSERT_EQ(d.outcome, DecideOutcome::kFeasible);
    // Around the cycle the colors alternate 1, 2, 1, 2.
    const auto& c = d.witness->colors;
    EXPECT_TRUE(c == (std::vector<int>{1, 2, 2, 1}) ||
                c == (std::vector<int>{2, 1, 1, 2}));
  }
}

TEST(DecideT, FourCycleFourColorsInfeasible) {
  EXPECT_EQ(testing::count_interval_colorings(cycle_graph(4), 4), 0);
  for (SearchMode mode : kModes) {
    EXPECT_EQ(decide_t(cycle_graph(4), 4, 60, mode).outcome,
              DecideOutcome::kInfeasible);
  }
}

TEST(DecideT, FiveCycleThreeColorsInfeasible) {
  EXPECT_EQ(testing::count_interval_colorings(cycle_graph(5), 3), 0);
  for (SearchMode mode : kModes) {
    EXPECT_EQ(decide_t(cycle_graph(5), 3, 60, mode).outcome,
              DecideOutcome::kInfeasible);
  }
}

TEST(DecideT, Preconditions) {
  EXPECT_THROW(decide_t(empty_graph(3), 1), Error);
  EXPECT_THROW(decide_t(cycle_graph(4), 0), Error);
  EXPECT_EQ(decide_t(cycle_graph(4), 1).outcome, DecideOutcome::kInfeasible);
}

TEST(DecideT, CancelledSearchTimesOut) {
  std::atomic<bool> stop{true};
  for (SearchMode mode : kModes) {
    const Decision d = decide_t(sylvester_graph(), 5,
                                Budget::unlimited().with_cancel(&stop), mode);
    EXPECT_EQ(d.outcome, DecideOutcome::kTimeout);
  }
}

TEST(DecideT, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(5);
  int compared = 0;
  while (compared < 12) {
    const Graph g = testing::random_graph(rng, 5, 0.5);
    if (g.size() == 0 || g.size() > 6 || !is_connected(g)) continue;
    ++compared;
    for (int t = 1; t <= g.size(); ++t) {
      const bool brute = testing::count_interval_colorings(g, t) > 0;
      for (SearchMode mode : kModes) {
        const Decision d = decide_t(g, t, 60, mode);
        EXPECT_EQ(d.outcome == DecideOutcome::kFeasible, brute)
            << "t=" << t;
        if (d.witness) {
          const Verdict v = verify_interval(g, *d.witness);
          EXPECT_TRUE(v.valid);
          EXPECT_EQ(v.t, t);
        }
      }
    }
  }
}

TEST(Summary, Hypercube) {
  const IntervalSummary s = summary(hypercube_graph(3));
  EXPECT_TRUE(s.member);
  EXPECT_EQ(s.w, 3);
  EXPECT_EQ(s.W, 6);
  EXPECT_EQ(s.feasible_t, (std::set<int>{3, 4, 5, 6}));
  EXPECT_EQ(s.search_ceiling, 7);
  EXPECT_FALSE(s.inconclusive());
}

TEST(Summary, NonMembers) {
  for (const Graph& g : {petersen_graph(), cycle_graph(3), cycle_graph(5)}) {
    const IntervalSummary s = summary(g);
    EXPECT_FALSE(s.member) << g.name();
    EXPECT_TRUE(s.feasible_t.empty());
    EXPECT_FALSE(s.certificate.empty());
  }
}

TEST(Summary, CompleteGraphOnFour) {
  const IntervalSummary s = summary(complete_graph(4));
  EXPECT_TRUE(s.member);
  EXPECT_EQ(s.w, 3);
  EXPECT_EQ(s.W, 4);
}

TEST(Summary, WitnessesVerify) {
  for (const Graph& g : {cycle_graph(6), path_graph(5), star_graph(3),
                         complete_graph(4), hypercube_graph(3)}) {
    const IntervalSummary s = summary(g);
    EXPECT_EQ(s.member, !s.feasible_t.empty());
    ASSERT_EQ(s.witnesses.size(), s.feasible_t.size());
    for (const auto& [t, c] : s.witnesses) {
      const Verdict v = verify_interval(g, c);
      EXPECT_TRUE(v.valid);
      EXPECT_EQ(v.t, t);
    }
    if (s.member) {
      EXPECT_EQ(s.w, *s.feasible_t.begin());
      EXPECT_EQ(s.W, *s.feasible_t.rbegin());
    }
  }
}

TEST(Summary, SizeGuard) {
  EXPECT_THROW(summary(hamming(std::vector<int>{4, 4})), SizeGuardError);
  SolverOptions o;
  o.max_edges = 12;
  EXPECT_NO_THROW(summary(hypercube_graph(3), o));
}

TEST(Summary, TimeoutIsInconclusive) {
  std::atomic<bool> stop{true};
  SolverOptions o;
  o.cancel = &stop;
  const IntervalSummary s = summary(sylvester_graph(), o);
  EXPECT_TRUE(s.inconclusive());
  EXPECT_FALSE(s.member);
}

TEST(Extremes, Examples) {
  EXPECT_EQ(least_w(cycle_graph(6)).value, 2);
  EXPECT_EQ(least_w(star_graph(3)).value, 3);
  EXPECT_EQ(greatest_W(path_graph(5)).value, 4);
  const Extremum prism = greatest_W(
      product(ProductKind::kCartesian, complete_graph(3), path_graph(2)));
  ASSERT_TRUE(prism.value);
  EXPECT_GE(*prism.value, 5);
  EXPECT_EQ(least_w(petersen_graph()).outcome, DecideOutcome::kInfeasible);
}

TEST(Extremes, PathMaximumMatchesBruteForce) {
  const Graph p5 = path_graph(5);
  EXPECT_GT(testing::count_interval_colorings(p5, 4), 0);
  EXPECT_EQ(testing::count_interval_colorings(p5, 5), 0);
}

TEST(SolverProperty, SerialAndParallelAgree) {
  const std::vector<Graph> cat = {
      cycle_graph(4),    cycle_graph(5),     cycle_graph(6),
      complete_graph(4), hypercube_graph(3), petersen_graph(),
      star_graph(3),     path_graph(5),
      product(ProductKind::kCartesian, complete_graph(3), path_graph(2))};
  for (const Graph& g : cat) {
    SolverOptions serial, parallel;
    serial.mode = SearchMode::kSerial;
    parallel.mode = SearchMode::kParallel;
    const IntervalSummary a = summary(g, serial);
    const IntervalSummary b = summary(g, parallel);
    EXPECT_EQ(a.feasible_t, b.feasible_t) << g.name();
    EXPECT_EQ(a.w, b.w);
    EXPECT_EQ(a.W, b.W);
  }
}

TEST(SolverProperty, RegularGraphsFollowTheClassDichotomy) {
  const std::vector<Graph> cat = {
      path_graph(2),     cycle_graph(3),     cycle_graph(4),
      cycle_graph(5),    cycle_graph(6),     complete_graph(4),
      hypercube_graph(3), petersen_graph(),
      product(ProductKind::kCartesian, complete_graph(3), path_graph(2)),
      product(ProductKind::kLexicographic, path_graph(2), empty_graph(3))};
  for (const Graph& g : cat) {
    const int delta = *regular_degree(g);
    const IntervalSummary s = summary(g);
    EXPECT_EQ(s.member, chromatic_index(g) == delta) << g.name();
    if (!s.member) continue;
    EXPECT_EQ(s.w, delta);
    for (int t = delta; t <= *s.W; ++t) {
      EXPECT_TRUE(s.feasible_t.contains(t)) << g.name() << " t=" << t;
    }
  }
}

TEST(SolverProperty, DecideMatchesSummary) {
  const Graph g = cycle_graph(6);
  const IntervalSummary s = summary(g);
  for (int t = 1; t <= 8; ++t) {
    const bool feasible =
        decide_t(g, t).outcome == DecideOutcome::kFeasible;
    EXPECT_EQ(feasible, s.feasible_t.contains(t)) << "t=" << t;
  }
}

}  // namespace
}  // namespace icolor
