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

#include <filesystem>

#include "icolor/constructions.h"
#include "icolor/families.h"
#include "icolor/io.h"
#include "icolor/products.h"

namespace icolor {
namespace {

TEST(GraphJson, RoundTrip) {
  for (const Graph& g :
       {hypercube_graph(3), petersen_graph(), empty_graph(3),
        product(ProductKind::kStrong, path_graph(3), cycle_graph(4))}) {
    const Graph back = graph_from_json(Json::parse(graph_to_json(g).dump()));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.name(), g.name());
    EXPECT_EQ(back.labels(), g.labels());
  }
}

TEST(GraphJson, Shape) {
  const Json j = graph_to_json(path_graph(3));
  EXPECT_EQ(j["name"], "P3");
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["edges"], Json::parse("[[0,1],[1,2]]"));
  EXPECT_FALSE(j.contains("labels"));
}

TEST(GraphJson, Malformed) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n":2,"edges":[]})")),
               FormatError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"name":"x","n":2,"edges":[[0]]})")),
               FormatError);
  EXPECT_THROW(
      graph_from_json(Json::parse(R"({"name":"x","n":2,"edges":[[0,0]]})")),
      FormatError);
  EXPECT_THROW(
      graph_from_json(Json::parse(R"({"name":"x","n":"2","edges":[]})")),
      FormatError);
}

TEST(ColoringJson, RoundTrip) {
  const EdgeColoring c{{1, 2, 3}, 3};
  const Json j = coloring_to_json(c, "K1,3");
  EXPECT_EQ(j["graph"], "K1,3");
  EXPECT_EQ(coloring_from_json(j), c);
  EXPECT_THROW(coloring_from_json(Json::parse(R"({"colors":[0]})")),
               FormatError);
  EXPECT_THROW(coloring_from_json(Json::parse(R"({"graph":"x"})")),
               FormatError);
}

TEST(Dot, LabelsColors) {
  const EdgeColoring c{{1, 2}, {}};
  const std::string dot = to_dot(path_graph(3), &c);
  EXPECT_NE(dot.find("graph \"P3\""), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1 [label=\"1\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2 [label=\"2\"]"), std::string::npos);
}

TEST(PlanJson, ListsWindows) {
  const Construction c = tensor_blocks(path_graph(2), EdgeColoring{{1}, {}},
                                       cycle_graph(4));
  const Json j = plan_to_json(*c.plan, c.graph);
  ASSERT_EQ(j["blocks"].size(), 1u);
  EXPECT_EQ(j["blocks"][0]["window"], Json::parse("[1,2]"));
  EXPECT_EQ(j["blocks"][0]["matchings"].size(), 2u);
}

TEST(Files, WriteAndRead) {
  const auto path = std::filesystem::temp_directory_path() / "icolor_io.json";
  write_json_file(path, graph_to_json(cycle_graph(5)));
  EXPECT_EQ(graph_from_json(read_json_file(path)), cycle_graph(5));
  std::filesystem::remove(path);
  EXPECT_THROW(read_json_file(path), FormatError);
}

}  // namespace
}  // namespace icolor
