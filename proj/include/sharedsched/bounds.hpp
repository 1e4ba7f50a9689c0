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

#include "sharedsched/rational.hpp"

// Worst-case ratio guarantees of the heuristics and schemes. Each returns the
// factor by which the algorithm may exceed the optimum under the stated
// sharing-ratio assumption.
namespace sharedsched::bounds {

namespace detail {
inline Rational r(std::size_t v) { return Rational(static_cast<long>(v)); }
} // namespace detail

/// Any list schedule, all machines bounded by e0.
inline Rational list_scheduling(const Rational &e0) { return 1 + 1 / e0; }

/// LS-ECT with the first m1 machines bounded by e0. The m1 = m-1 case has the
/// sharper 1 + 1/e0 guarantee.
inline Rational list_scheduling_ect(std::size_t m, std::size_t m1, const Rational &e0) {
    const Rational general = 1 + detail::r((m - 1) / m1 + 1) / e0;
    if (m1 + 1 == m)
        return std::min(general, list_scheduling(e0));
    return general;
}

/// LPT-ECT with the first m1 machines bounded by e0.
inline Rational lpt_ect(std::size_t m, std::size_t m1, std::size_t n, const Rational &e0) {
    const Rational general = 1 + (detail::r((m - 1) / m1) + detail::r(m) / detail::r(n)) / e0;
    if (m1 + 1 == m)
        return std::min(general, 1 + detail::r(m) / (detail::r(n) * e0));
    return general;
}

/// SPT-ECT for total completion time: ceil(m/m1) / e0.
inline Rational spt_ect(std::size_t m, std::size_t m1, const Rational &e0) {
    return detail::r((m + m1 - 1) / m1) / e0;
}

/// Makespan scheme with d large jobs; 1 + m/(d e0) when m1 = m.
inline Rational makespan_scheme(std::size_t m, std::size_t m1, std::size_t d, const Rational &e0) {
    if (d == 0)
        return list_scheduling_ect(m, m1, e0);
    if (m1 == m)
        return 1 + detail::r(m) / (detail::r(d) * e0);
    return 1 + detail::r(m * (m + m1 - 1)) / (detail::r(d) * e0 * detail::r(m1));
}

} // namespace sharedsched::bounds
