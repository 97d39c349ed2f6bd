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


// Acceptance run: one line per criterion, nonzero exit if any fails. The
// stretch criterion uses a fixed seed for its restart schedule; running out
// of time there is reported as inconclusive and does not fail the run.

#include <cstdio>
#include <string>

#include "icolor/suite.h"

int main() {
  using namespace icolor;
  constexpr std::uint64_t kStretchSeed = 1;
  std::vector<CheckResult> results;
  for (const std::string& id : suite_check_ids(Suite::kDesk)) {
    results.push_back(run_check(id));
  }
  SuiteOptions stretch;
  stretch.seed = kStretchSeed;
  results.push_back(run_check("A11", stretch));

  int failed = 0;
  for (const CheckResult& r : results) {
    std::string status(check_status_name(r.status));
    for (char& ch : status) ch = static_cast<char>(std::toupper(ch));
    std::printf("%-4s %-12s %.3fs (limit %.0fs)  observed: %s | expected: %s%s%s\n",
                r.id.c_str(), status.c_str(), r.runtime, r.limit,
                r.observed.c_str(), r.expected.c_str(),
                r.detail.empty() ? "" : " | ", r.detail.c_str());
    if (r.status == CheckStatus::kFail) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, results.size());
  return failed == 0 ? 0 : 1;
}
