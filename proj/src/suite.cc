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


#include "icolor/suite.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "icolor/bounds.h"
#include "icolor/chromatic.h"
#include "icolor/constructions.h"
#include "icolor/families.h"
#include "icolor/products.h"
#include "icolor/solver.h"
#include "icolor/tree.h"

namespace icolor {
namespace {

using Clock = std::chrono::steady_clock;

// Thrown inside a check when its timebox runs out.
struct TimedOut {};

class Check {
 public:
  Check(double limit, const SuiteOptions& options)
      : limit_(limit),
        timebox_(options.timebox.value_or(timebox_from_env().value_or(limit))),
        seed_(options.seed),
        start_(Clock::now()) {}

  double limit() const { return limit_; }
  double timebox() const { return timebox_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  double remaining() const {
    const double left = timebox_ - elapsed();
    if (left <= 0) throw TimedOut{};
    return left;
  }

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (messages_.size() < 6) messages_.push_back(what);
  }

  SolverOptions solver_options() const {
    SolverOptions o;
    o.timebox_seconds = remaining();
    return o;
  }

  IntervalSummary solve(const Graph& g) {
    IntervalSummary s = summary(g, solver_options());
    if (s.inconclusive()) throw TimedOut{};
    return s;
  }

  Extremum least(const Graph& g) {
    Extremum e = least_w(g, solver_options());
    if (e.outcome == DecideOutcome::kTimeout) throw TimedOut{};
    return e;
  }

  Extremum greatest(const Graph& g) {
    Extremum e = greatest_W(g, solver_options());
    if (e.outcome == DecideOutcome::kTimeout) throw TimedOut{};
    return e;
  }

  Decision decide(const Graph& g, int t) {
    Decision d = decide_t(g, t, remaining());
    if (d.outcome == DecideOutcome::kTimeout) throw TimedOut{};
    return d;
  }

  // Verifies `c` on `g` and expects exactly `t` colors.
  void expect_colors(const Graph& g, const EdgeColoring& c, long long t,
                     const std::string& what) {
    const Verdict v = verify_interval(g, c);
    std::ostringstream msg;
    msg << what << ": ";
    if (!v.valid) {
      msg << "invalid (" << v.violations.size() << " violations)";
    } else {
      msg << v.t << " colors, expected " << t;
    }
    expect(v.valid && v.t == t, msg.str());
  }

  int failures() const { return failures_; }
  const std::vector<std::string>& messages() const { return messages_; }

  std::string observed;
  std::string expected;

 private:
  double limit_;
  double timebox_;
  std::optional<std::uint64_t> seed_;
  Clock::time_point start_;
  int failures_ = 0;
  std::vector<std::string> messages_;
};

BoundValue bound(const std::string& id,
                 std::map<std::string, BoundValue> params) {
  return bound_eval({id, std::move(params)}).value;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? "," : "") + std::to_string(xs[i]);
  }
  return out;
}

// The factor catalog used by the product checks.
std::vector<Graph> factor_catalog() {
  return {path_graph(2), path_graph(3),  path_graph(4),
          path_graph(5), cycle_graph(4), cycle_graph(6),
          complete_graph(4), star_graph(3)};
}

Graph prism() {
  return product(ProductKind::kCartesian, complete_graph(3), path_graph(2));
}

// A1: w and W of Q1..Q3, and the doubling chain up to Q6.
void check_hypercubes(Check& c) {
  std::vector<int> ws, Ws, chain;
  for (int n = 1; n <= 3; ++n) {
    const Graph q = hypercube_graph(n);
    const IntervalSummary s = c.solve(q);
    const int want_W = n * (n + 1) / 2;
    ws.push_back(s.w.value_or(-1));
    Ws.push_back(s.W.value_or(-1));
    c.expect(s.member, q.name() + " not found to be a member");
    c.expect(s.w == n, q.name() + ": w=" + std::to_string(s.w.value_or(-1)));
    c.expect(s.W == want_W,
             q.name() + ": W=" + std::to_string(s.W.value_or(-1)));
    // Every t above W up to the ceiling was searched and refuted.
    c.expect(s.search_ceiling == theorem2_upper(q) &&
                 s.feasible_t.upper_bound(want_W) == s.feasible_t.end(),
             q.name() + ": t above W not refuted up to the ceiling");
  }
  const auto chain_start = Clock::now();
  for (int n = 1; n <= 6; ++n) {
    const Construction k = hypercube_max(n);
    c.expect(k.graph == hypercube_graph(n), "hypercube_max graph mismatch");
    c.expect_colors(k.graph, k.coloring, n * (n + 1) / 2,
                    "hypercube_max(" + std::to_string(n) + ")");
    chain.push_back(verify_interval(k.graph, k.coloring).t);
  }
  const double chain_s =
      std::chrono::duration<double>(Clock::now() - chain_start).count();
  c.expect(chain_s < 5.0, "hypercube_max chain took " +
                              std::to_string(chain_s) + " s");
  c.observed = "w(Q1..3)=" + join(ws) + " W(Q1..3)=" + join(Ws) +
               " hypercube_max(1..6)=" + join(chain);
  c.expected = "w=1,2,3 W=1,3,6 hypercube_max=1,3,6,10,15,21";
}

// A2: round robin on K2..K12 and W(K4) = 4.
void check_complete(Check& c) {
  std::vector<int> ts;
  for (int n = 1; n <= 6; ++n) {
    const Graph k = complete_graph(2 * n);
    const EdgeColoring rr = round_robin(n);
    c.expect_colors(k, rr, 2 * n - 1, "round_robin(" + std::to_string(n) + ")");
    ts.push_back(verify_interval(k, rr).t);
  }
  const Graph k4 = complete_graph(4);
  const BoundValue lower = bound("thm3", {{"n", 2}});
  const Extremum W = c.greatest(k4);
  const Decision five = c.decide(k4, 5);
  c.expect(lower == 4, "4n-2-p-q at n=2 gave " + std::to_string(lower));
  c.expect(W.value == 4, "W(K4)=" + std::to_string(W.value.value_or(-1)));
  c.expect(five.outcome == DecideOutcome::kInfeasible, "K4 5-coloring found");
  c.observed = "round_robin(1..6)=" + join(ts) + " W(K4)=" +
               std::to_string(W.value.value_or(-1)) + " lower=" +
               std::to_string(lower) + " t=5 " +
               (five.outcome == DecideOutcome::kInfeasible ? "refuted"
                                                           : "feasible");
  c.expected = "round_robin=1,3,5,7,9,11 W(K4)=4 lower=4 t=5 refuted";
}

// A3: Cartesian combination over all unordered factor pairs.
void check_cartesian(Check& c) {
  const std::vector<Graph> cat = factor_catalog();
  std::vector<Extremum> lo, hi;
  for (const Graph& g : cat) {
    lo.push_back(c.least(g));
    hi.push_back(c.greatest(g));
  }
  int pairs = 0, solved = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i; j < cat.size(); ++j) {
      ++pairs;
      const Graph& g = cat[i];
      const Graph& h = cat[j];
      const std::string tag = g.name() + "[]" + h.name();
      const int w_sum = *lo[i].value + *lo[j].value;
      const int W_sum = *hi[i].value + *hi[j].value;
      const Construction minimal =
          combine_cartesian(g, *lo[i].witness, h, *lo[j].witness);
      const Construction maximal =
          combine_cartesian(g, *hi[i].witness, h, *hi[j].witness);
      c.expect_colors(minimal.graph, minimal.coloring, w_sum, tag + " min");
      c.expect_colors(maximal.graph, maximal.coloring, W_sum, tag + " max");
      if (minimal.graph.size() <= 20) {
        ++solved;
        const Extremum w = c.least(minimal.graph);
        const Extremum W = c.greatest(minimal.graph);
        c.expect(w.value && *w.value <= w_sum, tag + ": exact w above sum");
        c.expect(W.value && *W.value >= W_sum, tag + ": exact W below sum");
      }
    }
  }
  c.observed = std::to_string(pairs) + " pairs, " +
               std::to_string(2 * pairs) + " combinations built, " +
               std::to_string(solved) +
               " products solved exactly, " + std::to_string(c.failures()) +
               " failures";
  c.expected = "exactly w(G)+w(H) and W(G)+W(H) colors; solver agrees";
}

// A4: K2-doubling of regular graphs at every feasible t.
void check_doubling(Check& c) {
  const std::vector<Graph> cat = {path_graph(2),   cycle_graph(4),
                                  cycle_graph(6),  complete_graph(4),
                                  hypercube_graph(2), hypercube_graph(3)};
  int built = 0;
  for (const Graph& g : cat) {
    const IntervalSummary s = c.solve(g);
    const int r = *regular_degree(g);
    for (const auto& [t, alpha] : s.witnesses) {
      const Construction d = double_regular(g, alpha);
      c.expect_colors(d.graph, d.coloring, t + r + 1,
                      g.name() + " t=" + std::to_string(t));
      ++built;
    }
    const BoundValue cor1 =
        bound("cor1", {{"WG", *s.W}, {"WH", 1}, {"r", r}, {"r2", 1}});
    c.expect(cor1 == *s.W + r + 1, g.name() + ": increment differs");
  }
  c.observed = std::to_string(built) + " doublings, " +
               std::to_string(c.failures()) + " failures";
  c.expected = "every doubling verifies with t+r+1 colors, equal to the "
               "W(G)+W(K2)+max{r,1} increment";
}

// A5: tensor, strong tensor, strong and lexicographic blocks.
void check_blocks(Check& c) {
  const std::vector<Graph> hs = {path_graph(2), cycle_graph(4), cycle_graph(6),
                                 complete_graph(4), cycle_graph(3)};
  int built = 0;
  for (const Graph& g : factor_catalog()) {
    const IntervalSummary s = c.solve(g);
    for (const auto& [t, alpha] : s.witnesses) {
      const bool minimal = t == *s.w;
      const std::string dir = minimal ? "-w" : "-W";
      const std::string tv = minimal ? "wG" : "WG";
      const std::string tag = g.name() + " t=" + std::to_string(t) + " ";
      for (const Graph& h : hs) {
        const int r = *regular_degree(h);
        const bool class1 = h.name() != "C3";
        c.expect_colors(product(ProductKind::kTensor, g, h),
                        tensor_blocks(g, alpha, h).coloring,
                        bound("thm15" + dir, {{tv, t}, {"r", r}}),
                        tag + "tensor " + h.name());
        c.expect_colors(product(ProductKind::kStrongTensor, g, h),
                        strong_tensor_blocks(g, alpha, h).coloring,
                        bound("thm16" + dir, {{tv, t}, {"r", r}}),
                        tag + "strong tensor " + h.name());
        built += 2;
        if (!class1) continue;
        c.expect_colors(product(ProductKind::kStrong, g, h),
                        strong_blocks(g, alpha, h).coloring,
                        bound("thm17" + dir, {{tv, t}, {"r", r}}),
                        tag + "strong " + h.name());
        c.expect_colors(
            product(ProductKind::kLexicographic, g, h),
            lex_blocks(g, alpha, h).coloring,
            bound("thm19" + dir, {{tv, t}, {"n", h.order()}, {"r", r}}),
            tag + "lex " + h.name());
        built += 2;
      }
      for (int n = 1; n <= 4; ++n) {
        const Graph e = empty_graph(n);
        c.expect_colors(product(ProductKind::kLexicographic, g, e),
                        lex_blocks(g, alpha, e).coloring,
                        bound("thm18-w", {{"wG", t}, {"n", n}}),
                        tag + "lex " + e.name());
        ++built;
      }
    }
  }
  c.observed = std::to_string(built) + " block colorings, " +
               std::to_string(c.failures()) + " failures";
  c.expected = "t*r, t(r+1), t(r+1)+r and t*n+r colors, all verified";
}

// A6: non-members, certified by exhausting the ceiling.
void check_non_members(Check& c) {
  std::string seen;
  const std::vector<Graph> cat = {cycle_graph(3), cycle_graph(5),
                                  petersen_graph(), sylvester_graph()};
  for (const Graph& g : cat) {
    const auto start = Clock::now();
    const IntervalSummary s = c.solve(g);
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    const int delta = max_degree(g);
    const int chi = chromatic_index(g);
    c.expect(!s.member, g.name() + " found to be a member");
    c.expect(s.search_ceiling == theorem2_upper(g),
             g.name() + ": range not exhausted");
    c.expect(regular_degree(g).has_value() && chi == delta + 1,
             g.name() + ": chromatic index " + std::to_string(chi));
    if (g.name() == "Petersen") {
      c.expect(secs < 60, "Petersen took " + std::to_string(secs) + " s");
    }
    seen += g.name() + (s.member ? " member" : " not member") + " (t<=" +
            std::to_string(s.search_ceiling) + ", chi'=" +
            std::to_string(chi) + ") ";
  }
  c.observed = seen;
  c.expected = "all four not members, each regular with chi' = Delta + 1";
}

std::vector<Graph> regular_catalog() {
  return {path_graph(2),
          cycle_graph(3),
          cycle_graph(4),
          cycle_graph(5),
          cycle_graph(6),
          cycle_graph(8),
          complete_graph(4),
          product(ProductKind::kLexicographic, path_graph(2), empty_graph(3)),
          hypercube_graph(3),
          prism()};
}

// A7: contiguous spectrum for regular members, and class 1 iff member.
void check_contiguity(Check& c) {
  std::string seen;
  for (const Graph& g : regular_catalog()) {
    if (g.size() > 14) continue;
    const IntervalSummary s = c.solve(g);
    const int delta = max_degree(g);
    c.expect(s.member == (chromatic_index(g) == delta),
             g.name() + ": membership disagrees with the chromatic index");
    if (!s.member) continue;
    bool contiguous = *s.w == delta;
    for (int t = delta; t <= *s.W; ++t) contiguous &= s.feasible_t.contains(t);
    c.expect(contiguous, g.name() + ": feasible t not [Delta, W]");
    seen += g.name() + "=[" + std::to_string(*s.w) + "," +
            std::to_string(*s.W) + "] ";
  }
  c.observed = seen;
  c.expected = "feasible t = [Delta, W] without gaps";
}

// A8: prism and P2 [] C4.
void check_small_instances(Check& c) {
  const IntervalSummary p = c.solve(prism());
  const BoundValue prism_lower = bound("thm14-path", {{"m", 1}, {"n", 1}});
  c.expect(prism_lower == 5, "prism lower bound " +
                                 std::to_string(prism_lower));
  c.expect(p.W && *p.W >= prism_lower, "W(prism) below 5");
  const Graph pc =
      product(ProductKind::kCartesian, path_graph(2), cycle_graph(4));
  const IntervalSummary s = c.solve(pc);
  const IntervalSummary q = c.solve(hypercube_graph(3));
  const BoundValue pc_lower = bound("thm7-pc", {{"m", 2}, {"n", 2}});
  c.expect(s.W == 6 && q.W == 6, "W(P2[]C4) or W(Q3) differs from 6");
  c.expect(pc_lower <= 6 && pc_lower == 6, "3m+n-2 at m=n=2 gave " +
                                               std::to_string(pc_lower));
  c.observed = "W(prism)=" + std::to_string(p.W.value_or(-1)) + " (lower " +
               std::to_string(prism_lower) + "), W(P2[]C4)=" +
               std::to_string(s.W.value_or(-1)) + ", W(Q3)=" +
               std::to_string(q.W.value_or(-1)) + " (lower " +
               std::to_string(pc_lower) + ")";
  c.expected = "W(prism)>=5, W(P2[]C4)=W(Q3)=6>=6";
}

struct Instance {
  Graph graph;
  // (id, params) lower bounds on W, upper bounds on w, equalities for w.
  std::vector<std::pair<std::string, std::map<std::string, BoundValue>>>
      bounds;
};

// A9: catalog examples and the consistency sweep.
void check_bounds(Check& c) {
  struct Example {
    std::string id;
    std::map<std::string, BoundValue> params;
    BoundValue value;
  };
  const std::vector<Example> examples = {
      {"thm3", {{"n", 2}}, 4},
      {"cor3", {{"m", 1}, {"n", 3}}, 6},
      {"thm14-path", {{"m", 1}, {"n", 1}}, 5},
      {"cor4", {{"n", 2}}, 13},
      {"thm24-W", {{"M", 3}, {"n", 2}}, 7},
      {"thm2", {{"d", 2}, {"Delta", 3}}, 7},
      {"thm2-bip", {{"d", 3}, {"Delta", 3}}, 7},
      {"thm2", {{"d", 1}, {"Delta", 3}}, 5},
  };
  int example_count = 0;
  for (const Example& e : examples) {
    const BoundValue v = bound(e.id, e.params);
    c.expect(v == e.value, e.id + " gave " + std::to_string(v));
    ++example_count;
  }
  c.expect(odd_decomposition(12) == OddDecomposition{3, 2} &&
               odd_decomposition(1) == OddDecomposition{1, 0} &&
               odd_decomposition(8) == OddDecomposition{1, 3},
           "odd_decomposition examples");
  for (int n = 1; n <= 20; ++n) {
    c.expect(bound("thm4", {{"n", n}}) == bound("cor3", {{"m", 1}, {"n", n}}),
             "thm4 and cor3 disagree at n=" + std::to_string(n));
  }

  // Exact values of the factors used as bound inputs.
  const int Wk2 = 1, Wp2 = 1, Wp3 = 2, Wc4 = 3, Wk4 = 4;
  const Graph k2 = path_graph(2), p3 = path_graph(3);
  const std::vector<Instance> sweep = {
      {k2, {{"thm3", {{"n", 1}}}, {"thm4", {{"n", 1}}},
            {"cor3", {{"m", 1}, {"n", 1}}}, {"thm10-W", {{"m", 1}, {"n", 1}}},
            {"thm10-w", {{"m", 1}, {"n", 1}}}}},
      {cycle_graph(4),
       {{"thm4", {{"n", 2}}}, {"cor3", {{"m", 1}, {"n", 2}}},
        {"thm10-W", {{"m", 1}, {"n", 2}}}, {"thm10-w", {{"m", 1}, {"n", 2}}},
        {"thm11-W", {{"n", 2}, {"m1", 1}, {"m2", 1}}},
        {"thm11-w", {{"n", 2}, {"m1", 1}, {"m2", 1}}},
        {"thm8-W", {{"WG", Wk2}, {"WH", Wk2}}},
        {"thm8-w", {{"wG", 1}, {"wH", 1}}},
        {"thm9", {{"WG", Wk2}, {"WH", Wk2}, {"r", 1}}},
        {"thm6-w", {{"Delta", 2}}}}},
      {hypercube_graph(3),
       {{"thm4", {{"n", 3}}}, {"cor3", {{"m", 1}, {"n", 3}}},
        {"cor2", {{"n", 3}, {"W1", 1}, {"W2", 1}, {"W3", 1},
                  {"r1", 1}, {"r2", 1}, {"r3", 1}}},
        {"thm7-pc", {{"m", 2}, {"n", 2}}},
        {"thm12", {{"WG", Wk2}, {"WC", Wc4}, {"n", 2}, {"r", 1}}},
        {"thm13", {{"WG", Wc4}, {"WP", Wp2}, {"m", 2}, {"r", 2}}},
        {"cor5", {{"WG", Wk2}, {"n", 2}, {"r", 1}}},
        {"cor1", {{"WG", Wc4}, {"WH", Wk2}, {"r", 2}, {"r2", 1}}},
        {"thm6-w", {{"Delta", 3}}}}},
      {complete_graph(4),
       {{"thm3", {{"n", 2}}},
        {"thm17-W", {{"WG", Wk2}, {"r", 1}}},
        {"thm17-w", {{"wG", 1}, {"r", 1}}},
        {"thm20-W", {{"WP", Wp2}, {"VH", 2}, {"r", 1}}},
        {"thm20-w", {{"Delta", 3}}},
        {"thm24-w", {{"m", 1}, {"Delta", 1}, {"n", 2}}},
        {"thm24-W", {{"M", 1}, {"n", 2}}}}},
      {prism(), {{"thm14-path", {{"m", 1}, {"n", 1}}}}},
      {product(ProductKind::kCartesian, complete_graph(4), k2),
       {{"cor1", {{"WG", Wk4}, {"WH", Wk2}, {"r", 3}, {"r2", 1}}},
        {"thm9", {{"WG", Wk2}, {"WH", Wk4}, {"r", 3}}},
        {"thm13", {{"WG", Wk4}, {"WP", Wp2}, {"m", 2}, {"r", 3}}},
        {"thm8-W", {{"WG", Wk4}, {"WH", Wk2}}}}},
      {product(ProductKind::kTensor, p3, cycle_graph(3)),
       {{"thm15-W", {{"WG", Wp3}, {"r", 2}}},
        {"thm15-w", {{"wG", 2}, {"r", 2}}}}},
      {product(ProductKind::kStrongTensor, k2, cycle_graph(3)),
       {{"thm16-W", {{"WG", Wk2}, {"r", 2}}},
        {"thm16-w", {{"wG", 1}, {"r", 2}}}}},
      {product(ProductKind::kLexicographic, p3, empty_graph(2)),
       {{"thm18-W", {{"WG", Wp3}, {"n", 2}}},
        {"thm18-w", {{"wG", 2}, {"n", 2}}}}},
      {product(ProductKind::kLexicographic, p3, k2),
       {{"thm20-W", {{"WP", Wp3}, {"VH", 2}, {"r", 1}}},
        {"thm20-w", {{"Delta", 5}}},
        {"thm19-W", {{"WG", Wp3}, {"n", 2}, {"r", 1}}},
        {"thm24-w", {{"m", 1}, {"Delta", 2}, {"n", 2}}},
        {"thm24-W", {{"M", 2}, {"n", 2}}}}},
  };
  int compared = 0;
  for (const Instance& inst : sweep) {
    const Graph& g = inst.graph;
    const IntervalSummary s = c.solve(g);
    c.expect(s.member, g.name() + " not a member");
    if (!s.member) continue;
    const int upper = theorem2_upper(g);
    const auto st = stats(g);
    const BoundValue via_catalog =
        bound(st.bipartite ? "thm2-bip" : "thm2",
              {{"d", *st.diameter}, {"Delta", st.max_degree}});
    c.expect(via_catalog == upper, g.name() + ": ceiling mismatch");
    c.expect(*s.W <= upper, g.name() + ": W above the ceiling");
    ++compared;
    for (const auto& [id, params] : inst.bounds) {
      const BoundResult b = bound_eval({id, params});
      bool ok = true;
      switch (b.sense) {
        case BoundSense::kLowerW:
          ok = b.value <= *s.W;
          break;
        case BoundSense::kUpperW:
          ok = b.value >= *s.W;
          break;
        case BoundSense::kUpperw:
          ok = b.value >= *s.w;
          break;
        case BoundSense::kEqualw:
          ok = b.value == *s.w;
          break;
      }
      c.expect(ok, g.name() + ": " + id + " = " + std::to_string(b.value) +
                       " inconsistent with w=" + std::to_string(*s.w) +
                       " W=" + std::to_string(*s.W));
      ++compared;
    }
  }
  c.observed = std::to_string(example_count) + " examples, " +
               std::to_string(compared) + " sweep comparisons, " +
               std::to_string(c.failures()) + " violations";
  c.expected = "examples exact, 0 violations";
}

// Independent reference for L(u, v): enumerate simple paths by DFS and count
// the path edges plus edges leaving internal path vertices.
int brute_force_L(const Graph& t, Vertex u, Vertex v) {
  std::vector<Vertex> path{u};
  std::vector<bool> on(t.order(), false);
  on[u] = true;
  int result = -1;
  std::function<void(Vertex)> walk = [&](Vertex x) {
    if (x == v) {
      int hanging = 0;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        for (EdgeId e : t.incident(path[i])) {
          if (!on[t.other(e, path[i])]) ++hanging;
        }
      }
      result = static_cast<int>(path.size()) - 1 + hanging;
      return;
    }
    for (EdgeId e : t.incident(x)) {
      const Vertex y = t.other(e, x);
      if (on[y]) continue;
      on[y] = true;
      path.push_back(y);
      walk(y);
      path.pop_back();
      on[y] = false;
    }
  };
  walk(u);
  return result;
}

// A10: tree parameters of paths and stars.
void check_trees(Check& c) {
  std::vector<int> ms, Ms;
  for (int n = 2; n <= 8; ++n) {
    const Graph p = path_graph(n);
    const TreeParams tp = tree_params(p);
    int brute_m = 0, brute_M = 0;
    for (Vertex u : tp.centers) {
      for (Vertex v : tp.pendants) {
        if (u != v) brute_m = std::max(brute_m, brute_force_L(p, u, v));
      }
    }
    for (Vertex u : tp.pendants) {
      for (Vertex v : tp.pendants) {
        if (u < v) brute_M = std::max(brute_M, brute_force_L(p, u, v));
      }
    }
    ms.push_back(tp.m);
    Ms.push_back(tp.M);
    c.expect(tp.m == n / 2 && tp.m == brute_m,
             p.name() + ": m=" + std::to_string(tp.m));
    c.expect(tp.M == n - 1 && tp.M == brute_M,
             p.name() + ": M=" + std::to_string(tp.M));
    for (int k = 1; k <= 4; ++k) {
      for (const char* id : {"thm24", "thm25"}) {
        c.expect(bound(std::string(id) + "-w",
                       {{"m", tp.m}, {"Delta", max_degree(p)}, {"n", k}}) ==
                         (tp.m + max_degree(p)) * k - 1,
                 p.name() + ": lexicographic tree w-bound");
        c.expect(bound(std::string(id) + "-W", {{"M", tp.M}, {"n", k}}) ==
                     (tp.M + 1) * k - 1,
                 p.name() + ": lexicographic tree W-bound");
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const Graph s = star_graph(n);
    const TreeParams tp = tree_params(s);
    c.expect(tp.centers == std::vector<Vertex>{0}, s.name() + ": center");
    c.expect(tp.m == 1 && tp.M == n,
             s.name() + ": m=" + std::to_string(tp.m) +
                 " M=" + std::to_string(tp.M));
    c.expect(bound("thm25-W", {{"M", tp.M}, {"n", 2}}) == 2 * n + 1,
             s.name() + ": lexicographic tree W-bound");
  }
  c.observed = "P2..P8 m=" + join(ms) + " M=" + join(Ms) +
               "; stars m=1 M=n";
  c.expected = "m=ceil((n-1)/2) M=n-1 matching path enumeration; stars m=1 "
               "M=n";
}

// A11: a proper 6-edge-coloring of the 6-regular S x C3.
void check_sylvester_tensor(Check& c, CheckResult& out) {
  const Graph g =
      product(ProductKind::kTensor, sylvester_graph(), cycle_graph(3));
  const int delta = max_degree(g);
  ProperSearchOptions options;
  options.restart_seed = c.seed();
  const ProperColoringResult r =
      find_proper_coloring(g, delta, Budget::seconds(c.remaining()), options);
  c.expected = "proper " + std::to_string(delta) +
               "-edge-coloring that verifies as an interval coloring";
  switch (r.status) {
    case SearchStatus::kFound: {
      c.expect_colors(g, *r.coloring, delta, g.name());
      c.observed = "found after " + std::to_string(r.nodes) + " nodes";
      break;
    }
    case SearchStatus::kExhausted:
      c.expect(false, "exhaustive search refuted a proper " +
                          std::to_string(delta) + "-coloring");
      c.observed = "refuted";
      break;
    case SearchStatus::kTimeout:
      c.observed = "no coloring within " + std::to_string(c.timebox()) + " s";
      out.status = CheckStatus::kInconclusive;
      break;
  }
}

struct CheckSpec {
  const char* id;
  double limit;
  void (*run)(Check&);
};

constexpr CheckSpec kDeskChecks[] = {
    {"A1", 60, check_hypercubes},   {"A2", 10, check_complete},
    {"A3", 120, check_cartesian},   {"A4", 10, check_doubling},
    {"A5", 60, check_blocks},       {"A6", 60, check_non_members},
    {"A7", 120, check_contiguity},  {"A8", 60, check_small_instances},
    {"A9", 5, check_bounds},        {"A10", 5, check_trees},
};

constexpr double kStretchLimit = 600;

CheckResult finish(Check& c, CheckResult r, bool timed_out, bool stretch) {
  r.runtime = c.elapsed();
  r.limit = c.limit();
  r.observed = c.observed;
  r.expected = c.expected;
  for (const std::string& m : c.messages()) {
    r.detail += (r.detail.empty() ? "" : "; ") + m;
  }
  if (c.failures() > static_cast<int>(c.messages().size())) {
    r.detail += "; " + std::to_string(c.failures()) + " failures in total";
  }
  if (c.failures() > 0) {
    r.status = CheckStatus::kFail;
  } else if (timed_out) {
    // Running out of a timebox shorter than the criterion's own limit says
    // nothing about the criterion; running out of the full limit fails it.
    const bool shortened = c.timebox() < c.limit();
    r.status = stretch || shortened ? CheckStatus::kInconclusive
                                    : CheckStatus::kFail;
    r.detail = "timed out after " + std::to_string(c.timebox()) + " s";
    if (r.observed.empty()) r.observed = "timeout";
  } else if (r.status == CheckStatus::kInconclusive) {
    // set by the check itself
  } else if (r.runtime > c.limit() && !stretch) {
    r.status = CheckStatus::kFail;
    r.detail = "runtime " + std::to_string(r.runtime) + " s over the " +
               std::to_string(c.limit()) + " s limit";
  } else {
    r.status = CheckStatus::kPass;
  }
  return r;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "desk") return Suite::kDesk;
  if (name == "stretch") return Suite::kStretch;
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  return suite == Suite::kDesk ? "desk" : "stretch";
}

std::string_view check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

int SuiteReport::count(CheckStatus status) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(),
                    [&](const CheckResult& r) { return r.status == status; }));
}

int SuiteReport::exit_code() const {
  if (count(CheckStatus::kFail) > 0) return 1;
  if (count(CheckStatus::kInconclusive) > 0) return 3;
  return 0;
}

std::vector<std::string> suite_check_ids(Suite suite) {
  if (suite == Suite::kStretch) return {"A11"};
  std::vector<std::string> ids;
  for (const CheckSpec& s : kDeskChecks) ids.emplace_back(s.id);
  return ids;
}

CheckResult run_check(std::string_view id, const SuiteOptions& options) {
  CheckResult result;
  result.id = std::string(id);
  if (id == "A11") {
    Check c(kStretchLimit, options);
    bool timed_out = false;
    try {
      check_sylvester_tensor(c, result);
    } catch (const TimedOut&) {
      timed_out = true;
    }
    return finish(c, std::move(result), timed_out, true);
  }
  for (const CheckSpec& s : kDeskChecks) {
    if (id != s.id) continue;
    Check c(s.limit, options);
    bool timed_out = false;
    try {
      s.run(c);
    } catch (const TimedOut&) {
      timed_out = true;
    } catch (const Error& e) {
      c.expect(false, std::string("error: ") + e.what());
    }
    return finish(c, std::move(result), timed_out, false);
  }
  throw Error("unknown check '" + std::string(id) + "'");
}

SuiteReport run_suite(Suite suite, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = std::string(suite_name(suite));
  for (const std::string& id : suite_check_ids(suite)) {
    report.checks.push_back(run_check(id, options));
  }
  return report;
}

Json report_to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const CheckResult& r : report.checks) {
    Json j;
    j["id"] = r.id;
    j["status"] = check_status_name(r.status);
    j["observed"] = r.observed;
    j["expected"] = r.expected;
    j["runtime"] = r.runtime;
    j["limit"] = r.limit;
    if (!r.detail.empty()) j["detail"] = r.detail;
    checks.push_back(std::move(j));
  }
  Json j;
  j["suite"] = report.suite;
  j["checks"] = std::move(checks);
  j["totals"] = {{"checks", report.checks.size()},
                 {"pass", report.count(CheckStatus::kPass)},
                 {"fail", report.count(CheckStatus::kFail)},
                 {"inconclusive", report.count(CheckStatus::kInconclusive)}};
  return j;
}

}  // namespace icolor
