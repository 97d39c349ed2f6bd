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

#include <random>

#include "icolor/bounds.h"
#include "icolor/families.h"
#include "icolor/products.h"
#include "icolor/tree.h"
#include "oracles.h"

namespace icolor {
namespace {

BoundValue eval(const std::string& id,
                std::map<std::string, BoundValue> params) {
  return bound_eval({id, std::move(params)}).value;
}

TEST(OddDecomposition, Examples) {
  EXPECT_EQ(odd_decomposition(12), (OddDecomposition{3, 2}));
  EXPECT_EQ(odd_decomposition(1), (OddDecomposition{1, 0}));
  EXPECT_EQ(odd_decomposition(8), (OddDecomposition{1, 3}));
  EXPECT_THROW(odd_decomposition(0), BoundError);
}

TEST(OddDecomposition, RoundTrips) {
  for (BoundValue n = 1; n <= 1000000; ++n) {
    const OddDecomposition d = odd_decomposition(n);
    ASSERT_EQ(d.p % 2, 1);
    ASSERT_EQ(d.p << d.q, n);
  }
}

TEST(BoundEval, Examples) {
  EXPECT_EQ(eval("thm3", {{"n", 2}}), 4);
  EXPECT_EQ(eval("cor3", {{"m", 1}, {"n", 3}}), 6);
  EXPECT_EQ(eval("thm14-path", {{"m", 1}, {"n", 1}}), 5);
  EXPECT_EQ(eval("cor4", {{"n", 2}}), 13);
  EXPECT_EQ(eval("thm24-W", {{"M", 3}, {"n", 2}}), 7);
}

TEST(BoundEval, HandComputedValues) {
  EXPECT_EQ(eval("thm2", {{"d", 2}, {"Delta", 3}}), 7);
  EXPECT_EQ(eval("thm2-bip", {{"d", 3}, {"Delta", 3}}), 7);
  EXPECT_EQ(eval("thm4", {{"n", 4}}), 10);
  EXPECT_EQ(eval("thm7-pc", {{"m", 2}, {"n", 2}}), 6);
  EXPECT_EQ(eval("thm7-p2c", {{"m", 1}, {"n", 2}}), 6);
  EXPECT_EQ(eval("thm7-p2c-odd", {{"m", 1}, {"n", 1}}), 5);
  EXPECT_EQ(eval("thm7-cc", {{"m", 2}, {"n", 3}}), 13);
  EXPECT_EQ(eval("thm7-cc-odd", {{"m", 2}, {"n", 1}}), 9);
  EXPECT_EQ(eval("thm7-cc-odd", {{"m", 3}, {"n", 1}}), 10);
  EXPECT_EQ(eval("thm9", {{"WG", 4}, {"WH", 1}, {"r", 1}}), 6);
  EXPECT_EQ(eval("cor1", {{"WG", 4}, {"WH", 1}, {"r", 3}, {"r2", 1}}), 8);
  // 1+2+3 + (3) + (3+2)
  EXPECT_EQ(eval("cor2", {{"n", 3}, {"W1", 1}, {"W2", 2}, {"W3", 3},
                          {"r1", 3}, {"r2", 2}, {"r3", 1}}),
            14);
  // m=3: p=3, q=0 -> (12-2-3-0)*2 = 14
  EXPECT_EQ(eval("thm10-W", {{"m", 3}, {"n", 2}}), 14);
  EXPECT_EQ(eval("thm10-w", {{"m", 3}, {"n", 2}}), 10);
  // (4-2-1-0) + (8-2-1-1) + 1*(2*1-1) = 1 + 4 + 1
  EXPECT_EQ(eval("thm11-W", {{"n", 2}, {"m1", 1}, {"m2", 2}}), 6);
  EXPECT_EQ(eval("thm11-w", {{"n", 2}, {"m1", 1}, {"m2", 2}}), 4);
  EXPECT_EQ(eval("thm12", {{"WG", 1}, {"WC", 3}, {"n", 2}, {"r", 1}}), 6);
  EXPECT_EQ(eval("thm13", {{"WG", 3}, {"WP", 1}, {"m", 2}, {"r", 2}}), 6);
  EXPECT_EQ(eval("cor5", {{"WG", 1}, {"n", 2}, {"r", 1}}), 6);
  EXPECT_EQ(eval("thm14-cube", {{"m", 1}, {"n", 1}}), 5);
  EXPECT_EQ(eval("cor6", {{"n", 2}}), 15);
  EXPECT_EQ(eval("thm15-W", {{"WG", 3}, {"r", 2}}), 6);
  EXPECT_EQ(eval("thm16-w", {{"wG", 2}, {"r", 2}}), 6);
  EXPECT_EQ(eval("thm17-W", {{"WG", 2}, {"r", 2}}), 8);
  EXPECT_EQ(eval("thm18-W", {{"WG", 2}, {"n", 3}}), 8);
  EXPECT_EQ(eval("thm19-w", {{"wG", 1}, {"n", 4}, {"r", 2}}), 6);
  EXPECT_EQ(eval("thm20-W", {{"WP", 2}, {"VH", 2}, {"r", 1}}), 7);
  EXPECT_EQ(eval("thm21-W", {{"WC", 3}, {"VH", 2}, {"r", 1}}), 6);
  EXPECT_EQ(eval("thm22-W", {{"WP", 1}, {"VH", 3}, {"n", 1}, {"r", 2}}), 5);
  EXPECT_EQ(eval("thm23-W", {{"WC", 3}, {"VH", 10}, {"n", 3}, {"r", 3}}), 26);
  EXPECT_EQ(eval("thm25-w", {{"m", 1}, {"Delta", 4}, {"n", 2}}), 9);
}

TEST(BoundEval, CubeFormulaAgreesWithHammingCorollary) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_EQ(eval("thm4", {{"n", n}}), eval("cor3", {{"m", 1}, {"n", n}}));
  }
}

TEST(BoundEval, Errors) {
  EXPECT_THROW(eval("thm99", {}), BoundError);
  EXPECT_THROW(eval("thm3", {}), BoundError);
  EXPECT_THROW(eval("thm3", {{"n", 2}, {"m", 1}}), BoundError);
  EXPECT_THROW(eval("thm12", {{"WG", 1}, {"WC", 3}, {"n", 1}, {"r", 1}}),
               BoundError);
  EXPECT_THROW(eval("cor2", {{"n", 2}, {"W1", 1}, {"W2", 1}, {"r1", 1},
                             {"r2", 2}}),
               BoundError);
  EXPECT_THROW(eval("thm7-cc", {{"m", 1}, {"n", 2}}), BoundError);
}

TEST(BoundCatalog, EveryEntryEvaluates) {
  for (const BoundEntry& e : bound_catalog()) {
    std::map<std::string, BoundValue> params;
    for (const std::string& p : e.params) params[p] = 2;
    if (e.id == "cor2") {
      params = {{"n", 2}, {"W1", 1}, {"W2", 1}, {"r1", 1}, {"r2", 1}};
    }
    if (e.id == "thm11-w" || e.id == "thm11-W") {
      params = {{"n", 2}, {"m1", 1}, {"m2", 1}};
    }
    EXPECT_NO_THROW(bound_eval({e.id, params})) << e.id;
    EXPECT_FALSE(e.formula.empty());
    EXPECT_FALSE(e.statement.empty());
  }
}

TEST(ParseBoundParams, Parses) {
  const auto p = parse_bound_params("m=1,n=-3");
  EXPECT_EQ(p.at("m"), 1);
  EXPECT_EQ(p.at("n"), -3);
  EXPECT_TRUE(parse_bound_params("").empty());
  EXPECT_THROW(parse_bound_params("m"), BoundError);
  EXPECT_THROW(parse_bound_params("m=x"), BoundError);
  EXPECT_THROW(parse_bound_params("=1"), BoundError);
}

TEST(TreeL, Examples) {
  EXPECT_EQ(tree_L(path_graph(4), 0, 3), 3);
  EXPECT_EQ(tree_L(star_graph(4), 1, 2), 4);
  EXPECT_EQ(tree_L(path_graph(5), 0, 4), 4);
  EXPECT_THROW(tree_L(cycle_graph(4), 0, 2), Error);
  EXPECT_THROW(tree_L(path_graph(4), 1, 1), Error);
}

TEST(TreeParams, Examples) {
  const TreeParams p4 = tree_params(path_graph(4));
  EXPECT_EQ(p4.centers, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(p4.m, 2);
  EXPECT_EQ(p4.M, 3);
  const TreeParams k14 = tree_params(star_graph(4));
  EXPECT_EQ(k14.centers, (std::vector<Vertex>{0}));
  EXPECT_EQ(k14.m, 1);
  EXPECT_EQ(k14.M, 4);
  const TreeParams p5 = tree_params(path_graph(5));
  EXPECT_EQ(p5.centers, (std::vector<Vertex>{2}));
  EXPECT_EQ(p5.m, 2);
  EXPECT_EQ(p5.M, 4);
  EXPECT_THROW(tree_params(cycle_graph(5)), Error);
  EXPECT_THROW(tree_params(path_graph(1)), Error);
}

TEST(TreeProperty, MatchesPathEnumeration) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph t = testing::random_tree(rng, 2 + trial % 9);
    for (Vertex u = 0; u < t.order(); ++u) {
      for (Vertex v = 0; v < t.order(); ++v) {
        if (u == v) continue;
        const int l = tree_L(t, u, v);
        EXPECT_EQ(l, testing::path_weight_by_enumeration(t, u, v));
        const int length = bfs_distances(t, u)[v];
        EXPECT_GE(l, length);
      }
    }
    const TreeParams p = tree_params(t);
    for (Vertex x : p.pendants) EXPECT_EQ(t.degree(x), 1);
    if (p.pendants.size() >= 2) {
      EXPECT_LE(p.m, p.M);
    }
  }
}

TEST(TreeProperty, PathsAndStarsClosedForms) {
  for (int n = 2; n <= 8; ++n) {
    const TreeParams p = tree_params(path_graph(n));
    EXPECT_EQ(p.m, n / 2);
    EXPECT_EQ(p.M, n - 1);
    const TreeParams s = tree_params(star_graph(n));
    EXPECT_EQ(s.m, 1);
    EXPECT_EQ(s.M, n);
  }
}

}  // namespace
}  // namespace icolor
