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

#include <optional>
#include <vector>

#include "sharedsched/rational.hpp"

namespace sharedsched {

/// A half-open-on-the-left interval (start, end] during which a machine offers
/// `ratio` of its capacity to primary jobs. An empty `end` means +infinity.
struct SharedInterval {
    Rational start;
    std::optional<Rational> end;
    Rational ratio{1};

    bool unbounded() const { return !end.has_value(); }
};

/// Capacity law of one machine: contiguous, sorted intervals starting at 0.
/// Past the last finite end the machine runs at full capacity.
struct MachineProfile {
    std::vector<SharedInterval> intervals;

    static MachineProfile full_capacity() { return constant(Rational(1)); }

    /// Single interval (0, inf) at the given ratio.
    static MachineProfile constant(const Rational &ratio) {
        return MachineProfile{{SharedInterval{Rational(0), std::nullopt, ratio}}};
    }

    /// Builds a profile from consecutive (end, ratio) steps; an empty end closes
    /// the profile with an unbounded interval.
    static MachineProfile from_steps(const std::vector<std::pair<std::optional<Rational>, Rational>> &steps) {
        MachineProfile profile;
        Rational cursor(0);
        for (const auto &[end, ratio] : steps) {
            profile.intervals.push_back(SharedInterval{cursor, end, ratio});
            if (end)
                cursor = *end;
        }
        return profile;
    }
};

} // namespace sharedsched
