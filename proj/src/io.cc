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


#include "icolor/io.h"

#include <fstream>
#include <iostream>
#include <sstream>

namespace icolor {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw FormatError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["name"] = g.name();
  j["n"] = g.order();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const Json& j) {
  const Json& name = field(j, "name");
  if (!name.is_string()) throw FormatError("name must be a string");
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) throw FormatError("n must be nonnegative");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw FormatError("edges must be an array");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) {
      throw FormatError("each edge must be a pair [u, v]");
    }
    pairs.emplace_back(as_int(e[0], "edge endpoint"),
                       as_int(e[1], "edge endpoint"));
  }
  std::vector<Label> labels;
  if (j.contains("labels")) {
    const Json& ls = j.at("labels");
    if (!ls.is_array()) throw FormatError("labels must be an array");
    for (const Json& l : ls) {
      if (!l.is_array()) throw FormatError("each label must be an array");
      Label label;
      for (const Json& x : l) label.push_back(as_int(x, "label entry"));
      labels.push_back(std::move(label));
    }
  }
  try {
    return Graph::build(n, std::move(pairs), name.get<std::string>(),
                        std::move(labels));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

Json coloring_to_json(const EdgeColoring& c, const std::string& graph_name) {
  Json j;
  j["graph"] = graph_name;
  j["colors"] = c.colors;
  if (c.declared_t) j["t"] = *c.declared_t;
  return j;
}

EdgeColoring coloring_from_json(const Json& j) {
  const Json& colors = field(j, "colors");
  if (!colors.is_array()) throw FormatError("colors must be an array");
  EdgeColoring c;
  for (const Json& x : colors) {
    const int color = as_int(x, "color");
    if (color < 1) throw FormatError("colors must be positive");
    c.colors.push_back(color);
  }
  if (j.contains("t")) c.declared_t = as_int(j.at("t"), "t");
  return c;
}

Json stats_to_json(const GraphStats& s) {
  Json j;
  j["degrees"] = s.degrees;
  j["max_degree"] = s.max_degree;
  j["diameter"] = s.diameter ? Json(*s.diameter) : Json("inf");
  j["bipartite"] = s.bipartite;
  j["connected"] = s.connected;
  j["regular"] = s.regular ? Json(*s.regular) : Json(nullptr);
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["valid"] = v.valid;
  if (v.valid) j["t"] = v.t;
  Json list = Json::array();
  for (const Violation& x : v.violations) {
    list.push_back({{"kind", violation_name(x.kind)}, {"site", x.site}});
  }
  j["violations"] = std::move(list);
  return j;
}

Json summary_to_json(const IntervalSummary& s, const std::string& graph_name) {
  Json j;
  j["graph"] = graph_name;
  j["member"] = s.member;
  j["w"] = s.w ? Json(*s.w) : Json(nullptr);
  j["W"] = s.W ? Json(*s.W) : Json(nullptr);
  j["feasible_t"] = s.feasible_t;
  j["timed_out"] = s.timed_out;
  j["inconclusive"] = s.inconclusive();
  j["search_range"] = {s.search_floor, s.search_ceiling};
  j["certificate"] = s.certificate;
  Json witnesses = Json::object();
  for (const auto& [t, c] : s.witnesses) {
    witnesses[std::to_string(t)] = c.colors;
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json plan_to_json(const BlockPlan& plan, const Graph& product) {
  Json blocks = Json::array();
  for (const Block& b : plan.blocks) {
    Json matchings = Json::array();
    int color = b.lo;
    for (const auto& m : b.matchings) {
      Json edges = Json::array();
      for (EdgeId e : m) {
        edges.push_back({product.edge(e).u, product.edge(e).v});
      }
      matchings.push_back({{"color", color++}, {"edges", std::move(edges)}});
    }
    blocks.push_back({{"g_edge", b.g_edge},
                      {"window", {b.lo, b.hi}},
                      {"matchings", std::move(matchings)}});
  }
  Json j;
  j["graph"] = product.name();
  j["blocks"] = std::move(blocks);
  return j;
}

std::string to_dot(const Graph& g, const EdgeColoring* c) {
  std::ostringstream out;
  out << "graph \"" << g.name() << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (g.has_labels()) {
      out << " [label=\"";
      const Label& l = g.labels()[v];
      for (std::size_t i = 0; i < l.size(); ++i) {
        out << (i ? "," : "") << l[i];
      }
      out << "\"]";
    }
    out << ";\n";
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (c) out << " [label=\"" << c->colors.at(e) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace icolor
