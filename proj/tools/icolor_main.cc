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


// icolor: command-line front end for graph products and interval edge
// colorings.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "icolor/bounds.h"
#include "icolor/constructions.h"
#include "icolor/families.h"
#include "icolor/io.h"
#include "icolor/products.h"
#include "icolor/solver.h"
#include "icolor/suite.h"
#include "icolor/tree.h"

namespace {

using namespace icolor;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kTimeout = 3;

// Usage problems detected after parsing (missing inputs, bad values).
class UsageError : public Error {
 public:
  using Error::Error;
};

Graph load_graph(const std::string& path) {
  return graph_from_json(read_json_file(path));
}

EdgeColoring load_coloring(const std::string& path, const Graph& g) {
  EdgeColoring c = coloring_from_json(read_json_file(path));
  if (static_cast<int>(c.colors.size()) != g.size()) {
    throw FormatError(path + ": " + std::to_string(c.colors.size()) +
                      " colors for " + std::to_string(g.size()) + " edges");
  }
  return c;
}

double default_timebox(double fallback) {
  return timebox_from_env().value_or(fallback);
}

std::string outcome_name(DecideOutcome o) {
  switch (o) {
    case DecideOutcome::kFeasible:
      return "feasible";
    case DecideOutcome::kInfeasible:
      return "infeasible";
    case DecideOutcome::kTimeout:
      return "timeout";
  }
  return "?";
}

int exit_for(DecideOutcome o) {
  switch (o) {
    case DecideOutcome::kFeasible:
      return kOk;
    case DecideOutcome::kInfeasible:
      return kNegative;
    case DecideOutcome::kTimeout:
      return kTimeout;
  }
  return kNegative;
}

struct GenArgs {
  std::string family;
  int n = 0;
  std::string out = "-";
};

int run_gen(const GenArgs& a) {
  auto kind = parse_family(a.family);
  if (!kind) throw UsageError("unknown family '" + a.family + "'");
  if (family_takes_parameter(*kind) && a.n < 1) {
    throw UsageError("family " + a.family + " needs --n >= 1");
  }
  write_json_file(a.out, graph_to_json(family(*kind, a.n)));
  return kOk;
}

struct ProductArgs {
  std::string kind;
  std::string g, h;
  std::string out = "-";
};

int run_product(const ProductArgs& a) {
  auto kind = parse_product_kind(a.kind);
  if (!kind) throw UsageError("unknown product '" + a.kind + "'");
  write_json_file(a.out,
                  graph_to_json(product(*kind, load_graph(a.g),
                                        load_graph(a.h))));
  return kOk;
}

struct HammingArgs {
  std::vector<int> dims;
  std::string out = "-";
};

int run_hamming(const HammingArgs& a) {
  write_json_file(a.out, graph_to_json(hamming(a.dims)));
  return kOk;
}

struct SolveArgs {
  std::string graph;
  bool w = false, W = false, summary = false;
  std::optional<int> t;
  bool serial = false;
  std::optional<double> timebox;
  int max_edges = kSummaryMaxEdges;
  std::string witness;
};

int run_solve(const SolveArgs& a) {
  const Graph g = load_graph(a.graph);
  const SearchMode mode =
      a.serial ? SearchMode::kSerial : SearchMode::kParallel;
  auto emit_witness = [&](const std::optional<EdgeColoring>& c) {
    if (c && !a.witness.empty()) {
      write_json_file(a.witness, coloring_to_json(*c, g.name()));
    }
  };
  if (a.t) {
    const Decision d = decide_t(
        g, *a.t, a.timebox.value_or(default_timebox(kDecideTimeboxSeconds)),
        mode);
    std::cout << outcome_name(d.outcome) << "\n";
    emit_witness(d.witness);
    return exit_for(d.outcome);
  }
  SolverOptions o;
  o.timebox_seconds =
      a.timebox.value_or(default_timebox(kSummaryTimeboxSeconds));
  o.max_edges = a.max_edges;
  o.mode = mode;
  if (a.w || a.W) {
    const Extremum e = a.w ? least_w(g, o) : greatest_W(g, o);
    switch (e.outcome) {
      case DecideOutcome::kFeasible:
        std::cout << *e.value << "\n";
        break;
      case DecideOutcome::kInfeasible:
        std::cout << "not_member\n";
        break;
      case DecideOutcome::kTimeout:
        std::cout << "timeout\n";
        break;
    }
    emit_witness(e.witness);
    return exit_for(e.outcome);
  }
  const IntervalSummary s = icolor::summary(g, o);
  std::cout << summary_to_json(s, g.name()).dump(2) << "\n";
  if (!a.witness.empty() && s.W) emit_witness(s.witnesses.at(*s.W));
  if (s.inconclusive()) return kTimeout;
  return s.member ? kOk : kNegative;
}

struct VerifyArgs {
  std::string graph, coloring;
};

int run_verify(const VerifyArgs& a) {
  const Graph g = load_graph(a.graph);
  const Verdict v = verify_interval(g, load_coloring(a.coloring, g));
  std::cout << verdict_to_json(v).dump(2) << "\n";
  return v.valid ? kOk : kNegative;
}

struct ConstructArgs {
  std::string kind;
  std::string g, alpha, h, beta;
  int n = 0;
  std::string out = "-";
  std::string graph_out;
  std::string trace;
};

int run_construct(const ConstructArgs& a) {
  auto need = [](const std::string& value, const char* flag) {
    if (value.empty()) throw UsageError(std::string("missing ") + flag);
    return value;
  };
  std::optional<Construction> c;
  if (a.kind == "round-robin" || a.kind == "hypercube") {
    if (a.n < 1) throw UsageError("--n must be at least 1");
    if (a.kind == "hypercube") {
      c = hypercube_max(a.n);
    } else {
      c = Construction{complete_graph(2 * a.n), round_robin(a.n), {}};
    }
  } else {
    const Graph g = load_graph(need(a.g, "--first"));
    const EdgeColoring alpha = load_coloring(need(a.alpha, "--alpha"), g);
    if (a.kind == "double") {
      c = double_regular(g, alpha);
    } else {
      const Graph h = load_graph(need(a.h, "--second"));
      std::optional<EdgeColoring> beta;
      if (!a.beta.empty()) beta = load_coloring(a.beta, h);
      if (a.kind == "cartesian") {
        need(a.beta, "--beta");
        c = combine_cartesian(g, alpha, h, *beta);
      } else if (a.kind == "tensor") {
        c = tensor_blocks(g, alpha, h);
      } else if (a.kind == "strong-tensor") {
        c = strong_tensor_blocks(g, alpha, h);
      } else if (a.kind == "strong") {
        c = strong_blocks(g, alpha, h, beta);
      } else if (a.kind == "lex") {
        c = lex_blocks(g, alpha, h, beta);
      } else {
        throw UsageError("unknown construction '" + a.kind + "'");
      }
    }
  }
  write_json_file(a.out, coloring_to_json(c->coloring, c->graph.name()));
  if (!a.graph_out.empty()) write_json_file(a.graph_out, graph_to_json(c->graph));
  if (!a.trace.empty()) {
    if (!c->plan) throw UsageError("--trace needs a block construction");
    write_json_file(a.trace, plan_to_json(*c->plan, c->graph));
  }
  return kOk;
}

struct BoundsArgs {
  std::string name;
  std::string params;
  bool list = false;
};

int run_bounds(const BoundsArgs& a) {
  if (a.list) {
    for (const BoundEntry& e : bound_catalog()) {
      std::string params;
      for (const std::string& p : e.params) {
        params += (params.empty() ? "" : ",") + p;
      }
      if (!e.params_note.empty()) params = e.params_note;
      std::cout << e.id << "\t" << e.statement << "\t" << e.graph << "\t"
                << bound_sense_name(e.sense) << " " << e.formula << "\t"
                << params << "\n";
    }
    return kOk;
  }
  if (a.name.empty()) throw UsageError("bounds needs --name or --list");
  try {
    std::cout << bound_eval({a.name, parse_bound_params(a.params)}).value
              << "\n";
  } catch (const BoundError& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

struct TreeArgs {
  std::string graph;
};

int run_tree_params(const TreeArgs& a) {
  const Graph t = load_graph(a.graph);
  const TreeParams p = tree_params(t);
  Json j;
  j["centers"] = p.centers;
  j["pendants"] = p.pendants;
  j["m"] = p.m;
  j["M"] = p.M;
  j["max_degree"] = max_degree(t);
  std::cout << j.dump(2) << "\n";
  return kOk;
}

struct StatsArgs {
  std::string graph;
};

int run_stats(const StatsArgs& a) {
  const Graph g = load_graph(a.graph);
  Json j = stats_to_json(stats(g));
  j["name"] = g.name();
  j["n"] = g.order();
  j["m"] = g.size();
  std::cout << j.dump(2) << "\n";
  return kOk;
}

struct CheckArgs {
  std::string suite = "desk";
  std::optional<double> timebox;
  std::optional<std::uint64_t> seed;
  std::string report = "icolor_report.json";
};

int run_check(const CheckArgs& a) {
  auto suite = parse_suite(a.suite);
  if (!suite) throw UsageError("unknown suite '" + a.suite + "'");
  SuiteOptions o;
  o.timebox = a.timebox;
  o.seed = a.seed;
  const SuiteReport r = run_suite(*suite, o);
  for (const CheckResult& c : r.checks) {
    std::cout << c.id << " " << check_status_name(c.status) << " ("
              << c.runtime << " s) " << c.observed;
    if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
    std::cout << "\n";
  }
  write_json_file(a.report, report_to_json(r));
  return r.exit_code();
}

struct ExportArgs {
  std::string graph;
  std::string coloring;
  bool dot = false;
  std::string out = "-";
};

int run_export(const ExportArgs& a) {
  if (!a.dot) throw UsageError("export needs --dot");
  const Graph g = load_graph(a.graph);
  std::optional<EdgeColoring> c;
  if (!a.coloring.empty()) c = load_coloring(a.coloring, g);
  write_text_file(a.out, to_dot(g, c ? &*c : nullptr));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph products and interval edge colorings"};
  app.require_subcommand(1);
  int code = kOk;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named graph");
  gen_cmd->add_option("--family", gen.family, "path, cycle, complete, "
                      "hypercube, star, empty, petersen, sylvester")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Family parameter");
  gen_cmd->add_option("-o,--output", gen.out, "Output file, - for stdout");

  ProductArgs prod;
  auto* prod_cmd = app.add_subcommand("product", "Form a graph product");
  prod_cmd->add_option("--kind", prod.kind, "cartesian, tensor, "
                       "strong_tensor, strong, lexicographic")
      ->required();
  prod_cmd->add_option("first", prod.g, "First factor graph")->required();
  prod_cmd->add_option("second", prod.h, "Second factor graph")->required();
  prod_cmd->add_option("-o,--output", prod.out, "Output file");

  HammingArgs ham;
  auto* ham_cmd = app.add_subcommand("hamming", "Hamming graph H(m1,...,mn)");
  ham_cmd->add_option("--dims", ham.dims, "m1,...,mn")
      ->required()
      ->delimiter(',');
  ham_cmd->add_option("-o,--output", ham.out, "Output file");

  StatsArgs st;
  auto* st_cmd = app.add_subcommand("stats", "Structural statistics");
  st_cmd->add_option("graph", st.graph, "Graph JSON")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact interval coloring search");
  solve_cmd->add_option("graph", solve.graph, "Graph JSON")->required();
  auto* w_flag = solve_cmd->add_flag("--w", solve.w, "Least t");
  auto* W_flag = solve_cmd->add_flag("--W", solve.W, "Greatest t");
  auto* s_flag = solve_cmd->add_flag("--summary", solve.summary,
                                     "Full feasible-t summary (default)");
  auto* t_opt = solve_cmd->add_option("--t", solve.t, "Decide one t");
  w_flag->excludes(W_flag)->excludes(s_flag)->excludes(t_opt);
  W_flag->excludes(s_flag)->excludes(t_opt);
  s_flag->excludes(t_opt);
  solve_cmd->add_flag("--serial", solve.serial, "Single-threaded search");
  solve_cmd->add_option("--timebox", solve.timebox, "Seconds")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-edges", solve.max_edges,
                        "Size guard for full searches");
  solve_cmd->add_option("--witness", solve.witness,
                        "Write the witness coloring here");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check an interval coloring");
  ver_cmd->add_option("graph", ver.graph, "Graph JSON")->required();
  ver_cmd->add_option("coloring", ver.coloring, "Coloring JSON")->required();

  ConstructArgs con;
  auto* con_cmd = app.add_subcommand("construct", "Explicit constructions");
  con_cmd->add_option("--kind", con.kind, "round-robin, hypercube, "
                      "cartesian, double, tensor, strong-tensor, strong, lex")
      ->required();
  con_cmd->add_option("--first", con.g, "First factor graph");
  con_cmd->add_option("--alpha", con.alpha, "Interval coloring of --first");
  con_cmd->add_option("--second", con.h, "Second factor graph");
  con_cmd->add_option("--beta", con.beta, "Coloring of --second");
  con_cmd->add_option("--n", con.n, "Size for round-robin and hypercube");
  con_cmd->add_option("-o,--output", con.out, "Coloring output");
  con_cmd->add_option("--graph-out", con.graph_out, "Product graph output");
  con_cmd->add_option("--trace", con.trace, "Block plan output");

  BoundsArgs bnd;
  auto* bnd_cmd = app.add_subcommand("bounds", "Evaluate catalog bounds");
  bnd_cmd->add_option("--name", bnd.name, "Catalog id");
  bnd_cmd->add_option("--params", bnd.params, "k=v,...");
  bnd_cmd->add_flag("--list", bnd.list, "Print the catalog");

  TreeArgs tree;
  auto* tree_cmd = app.add_subcommand("tree-params", "Tree path parameters");
  tree_cmd->add_option("graph", tree.graph, "Tree JSON")->required();

  CheckArgs chk;
  auto* chk_cmd = app.add_subcommand("check", "Run the acceptance checks");
  chk_cmd->add_option("--suite", chk.suite, "desk or stretch");
  chk_cmd->add_option("--timebox", chk.timebox, "Seconds per check")
      ->check(CLI::PositiveNumber);
  chk_cmd->add_option("--seed", chk.seed,
                      "Seed for the restart schedule of the stretch search");
  chk_cmd->add_option("--report", chk.report, "Report JSON output");

  ExportArgs exp;
  auto* exp_cmd = app.add_subcommand("export", "Export a graph");
  exp_cmd->add_option("graph", exp.graph, "Graph JSON")->required();
  exp_cmd->add_option("--coloring", exp.coloring, "Coloring JSON");
  exp_cmd->add_flag("--dot", exp.dot, "Graphviz DOT");
  exp_cmd->add_option("-o,--output", exp.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) code = run_gen(gen);
    if (*prod_cmd) code = run_product(prod);
    if (*ham_cmd) code = run_hamming(ham);
    if (*st_cmd) code = run_stats(st);
    if (*solve_cmd) code = run_solve(solve);
    if (*ver_cmd) code = run_verify(ver);
    if (*con_cmd) code = run_construct(con);
    if (*bnd_cmd) code = run_bounds(bnd);
    if (*tree_cmd) code = run_tree_params(tree);
    if (*chk_cmd) code = run_check(chk);
    if (*exp_cmd) code = run_export(exp);
  } catch (const std::exception& e) {
    // Malformed files, unmet preconditions and size guards all reject the
    // input rather than answer the question.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
