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

#include "icolor/families.h"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace icolor {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

constexpr std::array<std::pair<Family, std::string_view>, 8> kNames = {{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kComplete, "complete"},
    {Family::kHypercube, "hypercube"},
    {Family::kStar, "star"},
    {Family::kEmpty, "empty"},
    {Family::kPetersen, "petersen"},
    {Family::kSylvester, "sylvester"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (auto [kind, text] : kNames) {
    if (text == name) return kind;
  }
  return std::nullopt;
}

std::string_view family_name(Family kind) {
  for (auto [k, text] : kNames) {
    if (k == kind) return text;
  }
  return "?";
}

bool family_takes_parameter(Family kind) {
  return kind != Family::kPetersen && kind != Family::kSylvester;
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, std::move(edges), "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, std::move(edges), "C" + std::to_string(n));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::build(n, std::move(edges), "K" + std::to_string(n));
}

Graph hypercube_graph(int n) {
  require(n >= 1 && n <= 20, "hypercube needs 1 <= n <= 20");
  const int count = 1 << n;
  EdgeList edges;
  for (int x = 0; x < count; ++x) {
    for (int b = 0; b < n; ++b) {
      int y = x ^ (1 << b);
      if (x < y) edges.emplace_back(x, y);
    }
  }
  return Graph::build(count, std::move(edges), "Q" + std::to_string(n));
}

Graph star_graph(int n) {
  require(n >= 1, "star needs n >= 1");
  EdgeList edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph::build(n + 1, std::move(edges), "K1," + std::to_string(n));
}

Graph empty_graph(int n) {
  require(n >= 1, "empty graph needs n >= 1");
  return Graph::build(n, {}, std::to_string(n) + "K1");
}

Graph petersen_graph() {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::build(10, std::move(edges), "Petersen");
}

Graph sylvester_graph() {
  EdgeList edges;
  for (int k = 0; k < 3; ++k) {
    const int s = 1 + 5 * k, a = s + 1, b = s + 2, x = s + 3, y = s + 4;
    edges.emplace_back(0, s);
    // K_4 on {a,b,x,y} with ab subdivided by s.
    edges.emplace_back(s, a);
    edges.emplace_back(s, b);
    edges.emplace_back(a, x);
    edges.emplace_back(a, y);
    edges.emplace_back(b, x);
    edges.emplace_back(b, y);
    edges.emplace_back(x, y);
  }
  return Graph::build(16, std::move(edges), "Sylvester");
}

Graph family(Family kind, int n) {
  switch (kind) {
    case Family::kPath:
      return path_graph(n);
    case Family::kCycle:
      return cycle_graph(n);
    case Family::kComplete:
      return complete_graph(n);
    case Family::kHypercube:
      return hypercube_graph(n);
    case Family::kStar:
      return star_graph(n);
    case Family::kEmpty:
      return empty_graph(n);
    case Family::kPetersen:
      return petersen_graph();
    case Family::kSylvester:
      return sylvester_graph();
  }
  throw Error("unknown family");
}

}  // namespace icolor
