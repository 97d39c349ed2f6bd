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

#include "icolor/products.h"

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "icolor/families.h"

namespace icolor {
namespace {

constexpr std::array<std::pair<ProductKind, std::string_view>, 5> kNames = {{
    {ProductKind::kCartesian, "cartesian"},
    {ProductKind::kTensor, "tensor"},
    {ProductKind::kStrongTensor, "strong_tensor"},
    {ProductKind::kStrong, "strong"},
    {ProductKind::kLexicographic, "lexicographic"},
}};

using EdgeList = std::vector<std::pair<int, int>>;

// Both orientations of every G-edge paired with both orientations of every
// H-edge yield each tensor edge exactly once per unordered pair: (u1,v1)(u2,v2)
// and (u1,v2)(u2,v1) for u1 < u2.
void add_tensor_edges(const Graph& g, const Graph& h, EdgeList& out) {
  for (const Edge& ge : g.edges()) {
    for (const Edge& he : h.edges()) {
      out.emplace_back(product_vertex(h, ge.u, he.u),
                       product_vertex(h, ge.v, he.v));
      out.emplace_back(product_vertex(h, ge.u, he.v),
                       product_vertex(h, ge.v, he.u));
    }
  }
}

void add_g_fibers(const Graph& g, const Graph& h, EdgeList& out) {
  for (const Edge& ge : g.edges()) {
    for (Vertex v = 0; v < h.order(); ++v) {
      out.emplace_back(product_vertex(h, ge.u, v), product_vertex(h, ge.v, v));
    }
  }
}

void add_h_fibers(const Graph& g, const Graph& h, EdgeList& out) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (const Edge& he : h.edges()) {
      out.emplace_back(product_vertex(h, u, he.u), product_vertex(h, u, he.v));
    }
  }
}

void add_complete_blocks(const Graph& g, const Graph& h, EdgeList& out) {
  for (const Edge& ge : g.edges()) {
    for (Vertex a = 0; a < h.order(); ++a) {
      for (Vertex b = 0; b < h.order(); ++b) {
        out.emplace_back(product_vertex(h, ge.u, a),
                         product_vertex(h, ge.v, b));
      }
    }
  }
}

std::string symbol(ProductKind kind) {
  switch (kind) {
    case ProductKind::kCartesian:
      return "[]";
    case ProductKind::kTensor:
      return "x";
    case ProductKind::kStrongTensor:
      return "(x)";
    case ProductKind::kStrong:
      return "[x]";
    case ProductKind::kLexicographic:
      return "";
  }
  return "?";
}

}  // namespace

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  for (auto [kind, text] : kNames) {
    if (text == name) return kind;
  }
  if (name == "lex") return ProductKind::kLexicographic;
  return std::nullopt;
}

std::string_view product_kind_name(ProductKind kind) {
  for (auto [k, text] : kNames) {
    if (k == kind) return text;
  }
  return "?";
}

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
  EdgeList edges;
  switch (kind) {
    case ProductKind::kCartesian:
      add_g_fibers(g, h, edges);
      add_h_fibers(g, h, edges);
      break;
    case ProductKind::kTensor:
      add_tensor_edges(g, h, edges);
      break;
    case ProductKind::kStrongTensor:
      add_tensor_edges(g, h, edges);
      add_g_fibers(g, h, edges);
      break;
    case ProductKind::kStrong:
      add_tensor_edges(g, h, edges);
      add_g_fibers(g, h, edges);
      add_h_fibers(g, h, edges);
      break;
    case ProductKind::kLexicographic:
      add_complete_blocks(g, h, edges);
      add_h_fibers(g, h, edges);
      break;
  }

  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(g.order()) * h.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) labels.push_back({u, v});
  }
  std::string name = kind == ProductKind::kLexicographic
                         ? g.name() + "[" + h.name() + "]"
                         : g.name() + symbol(kind) + h.name();
  return Graph::build(g.order() * h.order(), std::move(edges), std::move(name),
                      std::move(labels));
}

Graph hamming(std::span<const int> dims) {
  if (dims.empty()) throw Error("hamming needs at least one dimension");
  for (int m : dims) {
    if (m < 1) throw Error("hamming dimensions must be >= 1");
  }
  Graph result = complete_graph(dims[0]);
  std::vector<Label> labels;
  for (Vertex v = 0; v < result.order(); ++v) labels.push_back({v});
  std::string name = "H(" + std::to_string(dims[0]);

  for (std::size_t i = 1; i < dims.size(); ++i) {
    const Graph factor = complete_graph(dims[i]);
    result = product(ProductKind::kCartesian, result, factor);
    std::vector<Label> next;
    next.reserve(static_cast<std::size_t>(result.order()));
    for (const Label& prefix : labels) {
      for (Vertex v = 0; v < factor.order(); ++v) {
        Label l = prefix;
        l.push_back(v);
        next.push_back(std::move(l));
      }
    }
    labels = std::move(next);
    name += "," + std::to_string(dims[i]);
  }
  name += ")";

  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : result.edges()) edges.emplace_back(e.u, e.v);
  return Graph::build(result.order(), std::move(edges), std::move(name),
                      std::move(labels));
}

}  // namespace icolor
