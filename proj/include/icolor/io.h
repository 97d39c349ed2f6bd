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


#ifndef ICOLOR_IO_H_
#define ICOLOR_IO_H_

#include <filesystem>
#include <optional>
#include <string>

#include "icolor/coloring.h"
#include "icolor/constructions.h"
#include "icolor/graph.h"
#include "icolor/solver.h"
#include "json.hpp"

namespace icolor {

using Json = nlohmann::ordered_json;

// Malformed or unreadable input files.
class FormatError : public Error {
 public:
  using Error::Error;
};

// {"name", "n", "edges": [[u,v],...], "labels"?}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"graph", "colors": [...], "t"?}
Json coloring_to_json(const EdgeColoring& c, const std::string& graph_name);
EdgeColoring coloring_from_json(const Json& j);

Json stats_to_json(const GraphStats& s);
Json verdict_to_json(const Verdict& v);
Json summary_to_json(const IntervalSummary& s, const std::string& graph_name);
Json plan_to_json(const BlockPlan& plan, const Graph& product);

// Graphviz DOT; edges carry their color as a label when `c` is given.
std::string to_dot(const Graph& g, const EdgeColoring* c = nullptr);

Json read_json_file(const std::filesystem::path& path);
// Writes `j` followed by a newline; "-" writes to stdout.
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

}  // namespace icolor

#endif  // ICOLOR_IO_H_
