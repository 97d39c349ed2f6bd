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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "icolor/families.h"
#include "icolor/io.h"

#ifndef ICOLOR_CLI_PATH
#error "ICOLOR_CLI_PATH must point at the icolor binary"
#endif

namespace icolor {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("icolor_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name) const {
    return (dir_ / name).string();
  }

  Outcome run(const std::string& args) const {
    const std::string cmd =
        std::string(ICOLOR_CLI_PATH) + " " + args + " 2>/dev/null";
    Outcome r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
      r.out.append(buf, got);
    }
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, GenHypercube) {
  const Outcome r = run("gen --family hypercube --n 3 -o " + file("q3.json"));
  EXPECT_EQ(r.code, 0);
  const Graph g = graph_from_json(read_json_file(file("q3.json")));
  EXPECT_EQ(g.size(), 12);
  EXPECT_EQ(g, hypercube_graph(3));
}

TEST_F(CliTest, SolveGreatestOfCube) {
  run("gen --family hypercube --n 3 -o " + file("q3.json"));
  const Outcome r = run("solve --W " + file("q3.json") + " --witness " +
                    file("w.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6\n");
  EXPECT_EQ(run("verify " + file("q3.json") + " " + file("w.json")).code, 0);
}

TEST_F(CliTest, VerifyReportsImproperColoring) {
  run("gen --family hypercube --n 3 -o " + file("q3.json"));
  // Edges (0,1) and (0,2) share vertex 0.
  std::ofstream(file("bad.json"))
      << R"({"graph":"Q3","colors":[1,1,2,2,3,3,1,1,2,2,3,3]})";
  const Outcome r = run("verify " + file("q3.json") + " " + file("bad.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not_proper"), std::string::npos);
}

TEST_F(CliTest, NonMemberExitsOne) {
  run("gen --family petersen -o " + file("p.json"));
  const Outcome r = run("solve --w " + file("p.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not_member\n");
}

TEST_F(CliTest, DecideOneT) {
  run("gen --family cycle --n 5 -o " + file("c5.json"));
  EXPECT_EQ(run("solve --t 3 " + file("c5.json")).code, 1);
  run("gen --family cycle --n 4 -o " + file("c4.json"));
  EXPECT_EQ(run("solve --t 3 --serial " + file("c4.json")).code, 0);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("gen --family hypercube --n 3 --bogus").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("gen --family wheel --n 3").code, 2);
  EXPECT_EQ(run("solve --w --W x.json").code, 2);
}

TEST_F(CliTest, MalformedFiles) {
  std::ofstream(file("junk.json")) << "{not json";
  EXPECT_EQ(run("stats " + file("junk.json")).code, 2);
  EXPECT_EQ(run("stats " + file("missing.json")).code, 2);
  run("gen --family path --n 3 -o " + file("p3.json"));
  std::ofstream(file("short.json")) << R"({"graph":"P3","colors":[1]})";
  EXPECT_EQ(run("verify " + file("p3.json") + " " + file("short.json")).code,
            2);
}

TEST_F(CliTest, ProductAndHamming) {
  run("gen --family path --n 2 -o " + file("k2.json"));
  const Outcome p = run("product --kind strong " + file("k2.json") + " " +
                    file("k2.json") + " -o " + file("k4.json"));
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(graph_from_json(read_json_file(file("k4.json"))),
            complete_graph(4));
  EXPECT_EQ(run("hamming --dims 2,2,2 -o " + file("h.json")).code, 0);
  EXPECT_EQ(graph_from_json(read_json_file(file("h.json"))),
            hypercube_graph(3));
}

TEST_F(CliTest, Bounds) {
  EXPECT_EQ(run("bounds --name cor4 --params n=2").out, "13\n");
  EXPECT_EQ(run("bounds --name thm12 --params WG=1,WC=3,n=1,r=1").code, 2);
  const Outcome list = run("bounds --list");
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("thm14-path"), std::string::npos);
}

TEST_F(CliTest, ConstructWithTrace) {
  run("gen --family path --n 3 -o " + file("p3.json"));
  run("gen --family cycle --n 4 -o " + file("c4.json"));
  std::ofstream(file("a.json")) << R"({"graph":"P3","colors":[1,2]})";
  const Outcome r = run("construct --kind strong --first " + file("p3.json") +
                    " --alpha " + file("a.json") + " --second " +
                    file("c4.json") + " -o " + file("c.json") +
                    " --graph-out " + file("g.json") + " --trace " +
                    file("t.json"));
  ASSERT_EQ(r.code, 0);
  const Outcome v = run("verify " + file("g.json") + " " + file("c.json"));
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("\"t\": 8"), std::string::npos);
  EXPECT_TRUE(read_json_file(file("t.json")).contains("blocks"));
}

TEST_F(CliTest, TreeParamsAndExport) {
  run("gen --family star --n 4 -o " + file("s.json"));
  const Json p = Json::parse(run("tree-params " + file("s.json")).out);
  EXPECT_EQ(p["m"], 1);
  EXPECT_EQ(p["M"], 4);
  const Outcome dot = run("export --dot " + file("s.json"));
  EXPECT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("0 -- 1"), std::string::npos);
}

TEST_F(CliTest, CheckWritesReport) {
  const Outcome r = run("check --suite desk --timebox 1 --report " +
                    file("r.json"));
  // Slow checks may turn inconclusive under a one-second timebox.
  EXPECT_TRUE(r.code == 0 || r.code == 3) << r.out;
  const Json report = read_json_file(file("r.json"));
  EXPECT_EQ(report["suite"], "desk");
  EXPECT_EQ(report["checks"].size(), 10u);
  EXPECT_EQ(report["totals"]["fail"], 0);
  EXPECT_EQ(report["totals"]["checks"], report["checks"].size());
}

}  // namespace
}  // namespace icolor
