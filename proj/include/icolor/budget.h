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

#ifndef ICOLOR_BUDGET_H_
#define ICOLOR_BUDGET_H_

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace icolor {

// Wall-clock deadline plus an optional external cancellation flag. Searches
// poll it every few thousand nodes; expiry yields a timeout outcome, never
// a verdict.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;

  static Budget unlimited() { return Budget(); }
  static Budget seconds(double s) {
    Budget b;
    b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(s));
    return b;
  }

  Budget& with_cancel(const std::atomic<bool>* flag) {
    cancel_ = flag;
    return *this;
  }

  bool expired() const {
    if (cancel_ != nullptr && cancel_->load(std::memory_order_relaxed)) {
      return true;
    }
    return deadline_.has_value() && Clock::now() >= *deadline_;
  }

  std::optional<double> remaining_seconds() const {
    if (!deadline_) return std::nullopt;
    return std::chrono::duration<double>(*deadline_ - Clock::now()).count();
  }

 private:
  std::optional<Clock::time_point> deadline_;
  const std::atomic<bool>* cancel_ = nullptr;
};

enum class SearchStatus { kFound, kExhausted, kTimeout };

// Seconds from ICOLOR_TIMEBOX, when set to a positive number.
inline std::optional<double> timebox_from_env() {
  const char* text = std::getenv("ICOLOR_TIMEBOX");
  if (text == nullptr) return std::nullopt;
  try {
    std::size_t used = 0;
    const double s = std::stod(text, &used);
    if (used == std::string(text).size() && s > 0) return s;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

}  // namespace icolor

#endif  // ICOLOR_BUDGET_H_
