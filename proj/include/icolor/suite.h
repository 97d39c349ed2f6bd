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


#ifndef ICOLOR_SUITE_H_
#define ICOLOR_SUITE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icolor/io.h"

namespace icolor {

enum class Suite { kDesk, kStretch };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

enum class CheckStatus { kPass, kFail, kInconclusive };

std::string_view check_status_name(CheckStatus status);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::kFail;
  std::string observed;
  std::string expected;
  double runtime = 0;   // seconds
  double limit = 0;     // seconds allowed by the criterion
  std::string detail;   // failure messages or timeout note
};

struct SuiteOptions {
  // Per-check timebox. Defaults to ICOLOR_TIMEBOX, else the criterion's own
  // runtime limit. A timeout under a timebox shorter than that limit is
  // inconclusive; otherwise it fails the criterion.
  std::optional<double> timebox;
  // Enables the seeded restart schedule of the proper-coloring search used
  // by A11. Without it A11 runs the plain exhaustive search.
  std::optional<std::uint64_t> seed;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  int count(CheckStatus status) const;
  // 0 all pass, 1 some check failed, 3 no failure but some inconclusive.
  int exit_code() const;
};

// Check ids in report order: A1..A10 for desk, A11 for stretch.
std::vector<std::string> suite_check_ids(Suite suite);

// Runs one criterion by id ("A1".."A11"). Throws Error for an unknown id.
CheckResult run_check(std::string_view id, const SuiteOptions& options = {});

SuiteReport run_suite(Suite suite, const SuiteOptions& options = {});

Json report_to_json(const SuiteReport& report);

}  // namespace icolor

#endif  // ICOLOR_SUITE_H_
