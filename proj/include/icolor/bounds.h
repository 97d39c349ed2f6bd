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

#ifndef ICOLOR_BOUNDS_H_
#define ICOLOR_BOUNDS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icolor/graph.h"

namespace icolor {

using BoundValue = std::int64_t;

class BoundError : public Error {
 public:
  using Error::Error;
};

struct OddDecomposition {
  BoundValue p = 1;  // odd part
  int q = 0;         // exponent of two

  friend bool operator==(const OddDecomposition&,
                         const OddDecomposition&) = default;
};

// n = p * 2^q with p odd. Throws BoundError for n < 1.
OddDecomposition odd_decomposition(BoundValue n);

enum class BoundSense {
  kUpperW,  // W(G) <= value
  kLowerW,  // W(G) >= value
  kUpperw,  // w(G) <= value
  kEqualw,  // w(G) == value
};

std::string_view bound_sense_name(BoundSense sense);

struct BoundQuery {
  std::string name;
  std::map<std::string, BoundValue> params;
};

struct BoundResult {
  BoundValue value = 0;
  BoundSense sense = BoundSense::kLowerW;
  std::string statement;  // source statement, e.g. "Theorem 7"
  std::string graph;      // the graph the bound is about
};

struct BoundEntry {
  std::string id;
  std::string statement;
  std::string graph;
  BoundSense sense;
  // Fixed parameter names. Indexed families (W1..Wn) are described in
  // `params_note` and expanded from n at evaluation time.
  std::vector<std::string> params;
  std::string params_note;
  std::string formula;
};

// The full catalog, in statement order.
std::span<const BoundEntry> bound_catalog();

// Evaluates the right-hand side of a catalog entry. Throws BoundError for an
// unknown name, a missing parameter, or a violated side condition.
BoundResult bound_eval(const BoundQuery& query);

// Parses "k=v,k=v" into a parameter map. Throws BoundError on bad syntax.
std::map<std::string, BoundValue> parse_bound_params(std::string_view text);

}  // namespace icolor

#endif  // ICOLOR_BOUNDS_H_
