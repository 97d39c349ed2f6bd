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

#ifndef ICOLOR_PRODUCTS_H_
#define ICOLOR_PRODUCTS_H_

#include <optional>
#include <span>
#include <string_view>

#include "icolor/graph.h"

namespace icolor {

enum class ProductKind {
  kCartesian,     // u1 = u2 and v1v2 in E(H), or v1 = v2 and u1u2 in E(G)
  kTensor,        // u1u2 in E(G) and v1v2 in E(H)
  kStrongTensor,  // tensor, or v1 = v2 and u1u2 in E(G)
  kStrong,        // strong tensor, or u1 = u2 and v1v2 in E(H)
  kLexicographic  // u1u2 in E(G), or u1 = u2 and v1v2 in E(H)
};

std::optional<ProductKind> parse_product_kind(std::string_view name);
std::string_view product_kind_name(ProductKind kind);

// Vertex (u, v) of the product is u * |V(H)| + v and carries label [u, v].
inline Vertex product_vertex(const Graph& h, Vertex u, Vertex v) {
  return u * h.order() + v;
}

Graph product(ProductKind kind, const Graph& g, const Graph& h);

// H(m_1, ..., m_n) = K_{m_1} [] ... [] K_{m_n}. Labels are the digit tuples.
Graph hamming(std::span<const int> dims);

}  // namespace icolor

#endif  // ICOLOR_PRODUCTS_H_
