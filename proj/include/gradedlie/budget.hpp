/* Copyright 2026 The gradedlie Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Wall-clock budgets for long computations.

#ifndef GRADEDLIE_BUDGET_HPP
#define GRADEDLIE_BUDGET_HPP

#include <chrono>
#include <optional>
#include <string>

#include "gradedlie/errors.hpp"

namespace gradedlie {

class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;  // unlimited
    static Deadline after_seconds(double seconds) {
        Deadline d;
        d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
        return d;
    }

    bool unlimited() const noexcept { return !end_.has_value(); }
    bool expired() const { return end_ && Clock::now() > *end_; }
    void check(const char* where) const {
        if (expired()) throw BudgetExceeded(std::string("budget exceeded during ") + where);
    }

private:
    std::optional<Clock::time_point> end_;
};

}  // namespace gradedlie

#endif  // GRADEDLIE_BUDGET_HPP
