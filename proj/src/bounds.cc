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

#include "icolor/bounds.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace icolor {
namespace {

class Params {
 public:
  Params(const std::string& id, const std::map<std::string, BoundValue>& p)
      : id_(id), p_(p) {}

  BoundValue operator[](const std::string& key) const {
    auto it = p_.find(key);
    if (it == p_.end()) {
      throw BoundError(id_ + ": missing parameter '" + key + "'");
    }
    used_.insert(key);
    return it->second;
  }

  // Parameter `key` that must satisfy key >= lo.
  BoundValue at_least(const std::string& key, BoundValue lo) const {
    const BoundValue v = (*this)[key];
    if (v < lo) {
      throw BoundError(id_ + ": side condition " + key + " >= " +
                       std::to_string(lo) + " violated (" + key + "=" +
                       std::to_string(v) + ")");
    }
    return v;
  }

  void require(bool ok, const std::string& what) const {
    if (!ok) throw BoundError(id_ + ": side condition violated: " + what);
  }

  // Every supplied parameter must have been read.
  void check_unused() const {
    for (const auto& [key, value] : p_) {
      if (!used_.contains(key)) {
        throw BoundError(id_ + ": unknown parameter '" + key + "'");
      }
    }
  }

 private:
  const std::string& id_;
  const std::map<std::string, BoundValue>& p_;
  mutable std::set<std::string> used_;
};

using Evaluator = std::function<BoundValue(const Params&)>;

struct Entry {
  BoundEntry info;
  Evaluator eval;
};

BoundValue ceil_div(BoundValue a, BoundValue b) { return (a + b - 1) / b; }

// 4m - 2 - p - q for m = p 2^q.
BoundValue complete_lower(BoundValue m) {
  const OddDecomposition d = odd_decomposition(m);
  return 4 * m - 2 - d.p - d.q;
}

std::vector<Entry> make_catalog() {
  using S = BoundSense;
  std::vector<Entry> c;
  auto add = [&c](std::string id, std::string statement, std::string graph,
                  S sense, std::vector<std::string> params,
                  std::string formula, Evaluator eval,
                  std::string note = {}) {
    c.push_back({BoundEntry{std::move(id), std::move(statement),
                            std::move(graph), sense, std::move(params),
                            std::move(note), std::move(formula)},
                 std::move(eval)});
  };

  add("thm2", "Theorem 2", "connected G in R", S::kUpperW, {"d", "Delta"},
      "(d+1)(Delta-1)+1", [](const Params& p) {
        return (p.at_least("d", 0) + 1) * (p.at_least("Delta", 1) - 1) + 1;
      });
  add("thm2-bip", "Theorem 2", "connected bipartite G in R", S::kUpperW,
      {"d", "Delta"}, "d(Delta-1)+1", [](const Params& p) {
        return p.at_least("d", 0) * (p.at_least("Delta", 1) - 1) + 1;
      });
  add("thm3", "Theorem 3", "K_{2n}, n = p 2^q", S::kLowerW, {"n"},
      "4n-2-p-q",
      [](const Params& p) { return complete_lower(p.at_least("n", 1)); });
  add("thm4", "Theorem 4", "Q_n", S::kLowerW, {"n"}, "n(n+1)/2",
      [](const Params& p) {
        const BoundValue n = p.at_least("n", 1);
        return n * (n + 1) / 2;
      });
  add("thm6-w", "Theorem 6", "products of paths/even cycles", S::kEqualw,
      {"Delta"}, "Delta",
      [](const Params& p) { return p.at_least("Delta", 1); });
  add("thm7-pc", "Theorem 7", "P_m [] C_{2n}", S::kLowerW, {"m", "n"},
      "3m+n-2", [](const Params& p) {
        return 3 * p.at_least("m", 1) + p.at_least("n", 2) - 2;
      });
  add("thm7-p2c", "Theorem 7", "P_{2m} [] C_{2n}", S::kLowerW, {"m", "n"},
      "4m+2n-2", [](const Params& p) {
        return 4 * p.at_least("m", 1) + 2 * p.at_least("n", 2) - 2;
      });
  add("thm7-p2c-odd", "Theorem 7", "P_{2m} [] C_{2n+1}", S::kLowerW,
      {"m", "n"}, "4m+2n-1", [](const Params& p) {
        return 4 * p.at_least("m", 1) + 2 * p.at_least("n", 1) - 1;
      });
  add("thm7-cc", "Theorem 7", "C_{2m} [] C_{2n}", S::kLowerW, {"m", "n"},
      "max{3m+n+2, 3n+m+2}", [](const Params& p) {
        const BoundValue m = p.at_least("m", 2), n = p.at_least("n", 2);
        return std::max(3 * m + n + 2, 3 * n + m + 2);
      });
  add("thm7-cc-odd", "Theorem 7", "C_{2m} [] C_{2n+1}", S::kLowerW,
      {"m", "n"}, "2m+2n+3 if m even, 2m+2n+2 if m odd", [](const Params& p) {
        const BoundValue m = p.at_least("m", 2), n = p.at_least("n", 1);
        return 2 * m + 2 * n + (m % 2 == 0 ? 3 : 2);
      });
  add("thm8-w", "Theorem 8", "G [] H", S::kUpperw, {"wG", "wH"}, "wG+wH",
      [](const Params& p) {
        return p.at_least("wG", 1) + p.at_least("wH", 1);
      });
  add("thm8-W", "Theorem 8", "G [] H", S::kLowerW, {"WG", "WH"}, "WG+WH",
      [](const Params& p) {
        return p.at_least("WG", 1) + p.at_least("WH", 1);
      });
  add("thm9", "Theorem 9", "G [] H, H r-regular", S::kLowerW,
      {"WG", "WH", "r"}, "WG+WH+r", [](const Params& p) {
        return p.at_least("WG", 1) + p.at_least("WH", 1) + p.at_least("r", 1);
      });
  add("cor1", "Corollary 1", "G [] H, G r-regular, H r2-regular",
      S::kLowerW, {"WG", "WH", "r", "r2"}, "WG+WH+max{r, r2}",
      [](const Params& p) {
        return p.at_least("WG", 1) + p.at_least("WH", 1) +
               std::max(p.at_least("r", 1), p.at_least("r2", 1));
      });
  add("cor2", "Corollary 2", "G_1 [] ... [] G_n, G_i r_i-regular",
      S::kLowerW, {"n"},
      "sum_i W_i + sum_{k=1}^{n-1} sum_{i=1}^{k} r_i", [](const Params& p) {
        const BoundValue n = p.at_least("n", 1);
        BoundValue total = 0, prefix = 0, previous = 0;
        for (BoundValue i = 1; i <= n; ++i) {
          const std::string k = std::to_string(i);
          total += p.at_least("W" + k, 1);
          const BoundValue r = p.at_least("r" + k, 1);
          if (i > 1) p.require(previous >= r, "r1 >= r2 >= ... >= rn");
          previous = r;
          prefix += r;
          if (i < n) total += prefix;
        }
        return total;
      },
      "n, W1..Wn, r1..rn");
  add("thm10-w", "Theorem 10", "H(2m, ..., 2m), n factors", S::kEqualw,
      {"m", "n"}, "(2m-1)n", [](const Params& p) {
        return (2 * p.at_least("m", 1) - 1) * p.at_least("n", 1);
      });
  add("thm10-W", "Theorem 10", "H(2m, ..., 2m), n factors", S::kLowerW,
      {"m", "n"}, "(4m-2-p-q)n", [](const Params& p) {
        return complete_lower(p.at_least("m", 1)) * p.at_least("n", 1);
      });
  add("thm11-w", "Theorem 11", "H(2m_1, ..., 2m_n)", S::kEqualw, {"n"},
      "sum_i (2m_i-1)", [](const Params& p) {
        const BoundValue n = p.at_least("n", 1);
        BoundValue total = 0;
        for (BoundValue i = 1; i <= n; ++i) {
          total += 2 * p.at_least("m" + std::to_string(i), 1) - 1;
        }
        return total;
      },
      "n, m1..mn");
  add("thm11-W", "Theorem 11", "H(2m_1, ..., 2m_n)", S::kLowerW, {"n"},
      "sum_i (4m_i-2-p_i-q_i) + sum_{i=1}^{n-1} i(2m_{n-i}-1)",
      [](const Params& p) {
        const BoundValue n = p.at_least("n", 1);
        std::vector<BoundValue> m(n + 1);
        for (BoundValue i = 1; i <= n; ++i) {
          m[i] = p.at_least("m" + std::to_string(i), 1);
        }
        BoundValue total = 0;
        for (BoundValue i = 1; i <= n; ++i) total += complete_lower(m[i]);
        for (BoundValue i = 1; i <= n - 1; ++i) total += i * (2 * m[n - i] - 1);
        return total;
      },
      "n, m1..mn");
  add("cor3-w", "Corollary 3", "H(2m, ..., 2m), n factors", S::kEqualw,
      {"m", "n"}, "(2m-1)n", [](const Params& p) {
        return (2 * p.at_least("m", 1) - 1) * p.at_least("n", 1);
      });
  add("cor3", "Corollary 3", "H(2m, ..., 2m), n factors", S::kLowerW,
      {"m", "n"}, "(4m-2-p-q)n + n(n-1)(2m-1)/2", [](const Params& p) {
        const BoundValue m = p.at_least("m", 1), n = p.at_least("n", 1);
        return complete_lower(m) * n + n * (n - 1) * (2 * m - 1) / 2;
      });
  add("thm12", "Theorem 12", "G [] C_{2n}, G r-regular", S::kLowerW,
      {"WG", "WC", "n", "r"}, "WG+WC+n*r", [](const Params& p) {
        return p.at_least("WG", 1) + p.at_least("WC", 1) +
               p.at_least("n", 2) * p.at_least("r", 1);
      });
  add("thm13", "Theorem 13", "G [] P_m, G r-regular", S::kLowerW,
      {"WG", "WP", "m", "r"}, "WG+WP+(m-1)*r", [](const Params& p) {
        return p.at_least("WG", 1) + p.at_least("WP", 0) +
               (p.at_least("m", 1) - 1) * p.at_least("r", 1);
      });
  add("cor4", "Corollary 4", "K_{2n} [] C_{2n}, n = p 2^q", S::kLowerW,
      {"n"}, "2n^2+4n-1-p-q", [](const Params& p) {
        const BoundValue n = p.at_least("n", 1);
        const OddDecomposition d = odd_decomposition(n);
        return 2 * n * n + 4 * n - 1 - d.p - d.q;
      });
  add("cor5", "Corollary 5", "G [] Q_n, G r-regular", S::kLowerW,
      {"WG", "n", "r"}, "WG + n(n+2r+1)/2", [](const Params& p) {
        const BoundValue n = p.at_least("n", 1), r = p.at_least("r", 1);
        return p.at_least("WG", 1) + n * (n + 2 * r + 1) / 2;
      });
  // The statement writes P_{2n}; the right-hand side depends on m, so the
  // path is read as P_{2m}. Both m and n are taken explicitly.
  add("thm14-path", "Theorem 14", "K_{2n+1} [] P_{2m}", S::kLowerW,
      {"m", "n"}, "2(mn+m+n)-1", [](const Params& p) {
        const BoundValue m = p.at_least("m", 1), n = p.at_least("n", 1);
        return 2 * (m * n + m + n) - 1;
      });
  add("thm14-cube", "Theorem 14", "K_{2n+1} [] Q_m", S::kLowerW, {"m", "n"},
      "(m+4n)(m+1)/2", [](const Params& p) {
        const BoundValue m = p.at_least("m", 1), n = p.at_least("n", 1);
        return (m + 4 * n) * (m + 1) / 2;
      });
  add("cor6", "Corollary 6", "K_{2n+1} [] Q_n", S::kLowerW, {"n"},
      "(5n^2+5n)/2", [](const Params& p) {
        const BoundValue n = p.at_least("n", 1);
        return (5 * n * n + 5 * n) / 2;
      });
  add("thm15-w", "Theorem 15", "G x H, H r-regular", S::kUpperw,
      {"wG", "r"}, "wG*r",
      [](const Params& p) { return p.at_least("wG", 1) * p.at_least("r", 1); });
  add("thm15-W", "Theorem 15", "G x H, H r-regular", S::kLowerW,
      {"WG", "r"}, "WG*r",
      [](const Params& p) { return p.at_least("WG", 1) * p.at_least("r", 1); });
  add("thm16-w", "Theorem 16", "G (x) H, H r-regular", S::kUpperw,
      {"wG", "r"}, "wG(r+1)", [](const Params& p) {
        return p.at_least("wG", 1) * (p.at_least("r", 0) + 1);
      });
  add("thm16-W", "Theorem 16", "G (x) H, H r-regular", S::kLowerW,
      {"WG", "r"}, "WG(r+1)", [](const Params& p) {
        return p.at_least("WG", 1) * (p.at_least("r", 0) + 1);
      });
  add("thm17-w", "Theorem 17", "G [x] H, H r-regular", S::kUpperw,
      {"wG", "r"}, "wG(r+1)+r", [](const Params& p) {
        const BoundValue r = p.at_least("r", 0);
        return p.at_least("wG", 1) * (r + 1) + r;
      });
  add("thm17-W", "Theorem 17", "G [x] H, H r-regular", S::kLowerW,
      {"WG", "r"}, "WG(r+1)+r", [](const Params& p) {
        const BoundValue r = p.at_least("r", 0);
        return p.at_least("WG", 1) * (r + 1) + r;
      });
  add("thm18-w", "Theorem 18", "G[nK_1]", S::kUpperw, {"wG", "n"}, "wG*n",
      [](const Params& p) { return p.at_least("wG", 1) * p.at_least("n", 1); });
  add("thm18-W", "Theorem 18", "G[nK_1]", S::kLowerW, {"WG", "n"},
      "(WG+1)n-1", [](const Params& p) {
        return (p.at_least("WG", 1) + 1) * p.at_least("n", 1) - 1;
      });
  add("thm19-w", "Theorem 19", "G[H], H r-regular, |V(H)| = n", S::kUpperw,
      {"wG", "n", "r"}, "wG*n+r", [](const Params& p) {
        return p.at_least("wG", 1) * p.at_least("n", 1) + p.at_least("r", 0);
      });
  add("thm19-W", "Theorem 19", "G[H], H r-regular, |V(H)| = n", S::kLowerW,
      {"WG", "n", "r"}, "WG*n+r", [](const Params& p) {
        return p.at_least("WG", 1) * p.at_least("n", 1) + p.at_least("r", 0);
      });
  for (const char* id : {"thm20", "thm21", "thm22", "thm23"}) {
    const std::string name = id;
    const std::string statement = "Theorem " + name.substr(3);
    add(name + "-w", statement, "lexicographic product over P_n or C_{2n}",
        S::kEqualw, {"Delta"}, "Delta",
        [](const Params& p) { return p.at_least("Delta", 1); });
    if (name == "thm20") {
      add("thm20-W", statement, "P_n[H], H in R r-regular", S::kLowerW,
          {"WP", "VH", "r"}, "WP(VH+r)+r", [](const Params& p) {
            const BoundValue r = p.at_least("r", 0);
            return p.at_least("WP", 0) * (p.at_least("VH", 1) + r) + r;
          });
    } else if (name == "thm21") {
      add("thm21-W", statement, "C_{2n}[H], H in R r-regular", S::kLowerW,
          {"WC", "VH", "r"}, "(WC-1)(VH+r)", [](const Params& p) {
            return (p.at_least("WC", 1) - 1) *
                   (p.at_least("VH", 1) + p.at_least("r", 0));
          });
    } else if (name == "thm22") {
      add("thm22-W", statement, "P_{2n}[H], H not in R, r-regular",
          S::kLowerW, {"WP", "VH", "n", "r"}, "WP*VH + n*r",
          [](const Params& p) {
            return p.at_least("WP", 1) * p.at_least("VH", 1) +
                   p.at_least("n", 1) * p.at_least("r", 0);
          });
    } else {
      add("thm23-W", statement, "C_{2n}[H], H not in R, r-regular",
          S::kLowerW, {"WC", "VH", "n", "r"}, "(WC-1)VH + ceil(n/2)*r",
          [](const Params& p) {
            return (p.at_least("WC", 1) - 1) * p.at_least("VH", 1) +
                   ceil_div(p.at_least("n", 2), 2) * p.at_least("r", 0);
          });
    }
  }
  for (const char* id : {"thm24", "thm25"}) {
    const std::string name = id;
    const std::string statement = "Theorem " + name.substr(3);
    const std::string graph = name == "thm24" ? "T[P_n]" : "T[S_n]";
    add(name + "-w", statement, graph, S::kUpperw, {"m", "Delta", "n"},
        "(m+Delta)n-1", [](const Params& p) {
          return (p.at_least("m", 1) + p.at_least("Delta", 1)) *
                     p.at_least("n", 1) -
                 1;
        });
    add(name + "-W", statement, graph, S::kLowerW, {"M", "n"}, "(M+1)n-1",
        [](const Params& p) {
          return (p.at_least("M", 1) + 1) * p.at_least("n", 1) - 1;
        });
  }
  return c;
}

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = make_catalog();
  return entries;
}

const std::vector<BoundEntry>& catalog_info() {
  static const std::vector<BoundEntry> info = [] {
    std::vector<BoundEntry> out;
    for (const Entry& e : catalog()) out.push_back(e.info);
    return out;
  }();
  return info;
}

}  // namespace

OddDecomposition odd_decomposition(BoundValue n) {
  if (n < 1) throw BoundError("odd_decomposition needs n >= 1");
  OddDecomposition d{n, 0};
  while (d.p % 2 == 0) {
    d.p /= 2;
    ++d.q;
  }
  return d;
}

std::string_view bound_sense_name(BoundSense sense) {
  switch (sense) {
    case BoundSense::kUpperW:
      return "W <=";
    case BoundSense::kLowerW:
      return "W >=";
    case BoundSense::kUpperw:
      return "w <=";
    case BoundSense::kEqualw:
      return "w =";
  }
  return "?";
}

std::span<const BoundEntry> bound_catalog() { return catalog_info(); }

BoundResult bound_eval(const BoundQuery& query) {
  for (const Entry& e : catalog()) {
    if (e.info.id != query.name) continue;
    Params params(e.info.id, query.params);
    BoundResult result;
    result.value = e.eval(params);
    params.check_unused();
    result.sense = e.info.sense;
    result.statement = e.info.statement;
    result.graph = e.info.graph;
    return result;
  }
  throw BoundError("unknown bound '" + query.name + "'");
}

std::map<std::string, BoundValue> parse_bound_params(std::string_view text) {
  std::map<std::string, BoundValue> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw BoundError("malformed parameter '" + std::string(item) +
                       "', expected key=value");
    }
    const std::string_view value = item.substr(eq + 1);
    BoundValue v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw BoundError("parameter '" + std::string(item.substr(0, eq)) +
                       "' is not an integer");
    }
    out[std::string(item.substr(0, eq))] = v;
  }
  return out;
}

}  // namespace icolor
