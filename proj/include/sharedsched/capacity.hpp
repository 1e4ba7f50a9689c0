/*
Copyright 2026 The sharedsched Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sharedsched/profile.hpp"
#include "sharedsched/rational.hpp"

namespace sharedsched {

/// Cumulative work table of a machine.
///
/// Breakpoints t_0 = 0 < t_1 < ... < t_K are the finite interval ends; A(t_k)
/// is the primary-job work the machine can complete in (0, t_k]. Segment k
/// (between t_{k-1} and t_k) runs at ratios()[k-1]. Beyond t_K the machine
/// runs at tail_ratio(), which is 1 unless the profile ends with an unbounded
/// shared interval.
///
/// Because primary jobs run back to back from time 0, the completion of a job
/// depends only on the total work scheduled up to and including it, so every
/// scheduler reduces to finish_time() queries on prefix work.
class CapacityTable {
  public:
    CapacityTable() : breakpoints_{Rational(0)}, cumulative_{Rational(0)}, tail_ratio_(1) {}

    /// Linear in the number of intervals. Assumes the profile is valid.
    explicit CapacityTable(const MachineProfile &profile) : CapacityTable() {
        for (const SharedInterval &interval : profile.intervals) {
            if (!interval.end) {
                tail_ratio_ = interval.ratio;
                break;
            }
            const Rational &prev_t = breakpoints_.back();
            const Rational &prev_a = cumulative_.back();
            cumulative_.push_back(prev_a + interval.ratio * (*interval.end - prev_t));
            breakpoints_.push_back(*interval.end);
            ratios_.push_back(interval.ratio);
        }
    }

    /// Earliest time at which exactly `work` units of primary work are done.
    /// A work value landing on a breakpoint resolves to that breakpoint.
    Rational finish_time(const Rational &work) const {
        if (work < 0)
            throw std::invalid_argument("finish_time: negative work");
        if (work == 0)
            return Rational(0);
        // first k with A(t_k) >= work; k >= 1 since A(t_0) = 0 < work
        const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), work);
        if (it == cumulative_.end())
            return breakpoints_.back() + (work - cumulative_.back()) / tail_ratio_;
        const std::size_t k = static_cast<std::size_t>(it - cumulative_.begin());
        return breakpoints_[k - 1] + (work - cumulative_[k - 1]) / ratios_[k - 1];
    }

    /// Work completed in (0, t].
    Rational work_at(const Rational &t) const {
        if (t < 0)
            throw std::invalid_argument("work_at: negative time");
        const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
        const std::size_t k = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
        const Rational &rate = k < ratios_.size() ? ratios_[k] : tail_ratio_;
        return cumulative_[k] + (t - breakpoints_[k]) * rate;
    }

    /// Smallest ratio over segments that intersect (0, t].
    Rational min_ratio_until(const Rational &t) const {
        Rational best(1);
        for (std::size_t k = 0; k < ratios_.size(); ++k) {
            if (breakpoints_[k] >= t)
                return best;
            best = std::min(best, ratios_[k]);
        }
        if (breakpoints_.back() < t)
            best = std::min(best, tail_ratio_);
        return best;
    }

    std::span<const Rational> breakpoints() const { return breakpoints_; }
    std::span<const Rational> cumulative_work() const { return cumulative_; }
    std::span<const Rational> ratios() const { return ratios_; }
    const Rational &tail_ratio() const { return tail_ratio_; }

  private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> cumulative_;
    std::vector<Rational> ratios_;
    Rational tail_ratio_;
};

inline CapacityTable build_capacity_table(const MachineProfile &profile) { return CapacityTable(profile); }

} // namespace sharedsched
