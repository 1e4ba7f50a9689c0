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

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharedsched/model.hpp"
#include "sharedsched/profile.hpp"
#include "sharedsched/rational.hpp"

namespace sharedsched {

namespace detail {

inline Rational partition_total(const std::vector<long> &a, long f) {
    if (a.empty())
        throw std::invalid_argument("partition gadget: empty list");
    if (f <= 1)
        throw std::invalid_argument("partition gadget: f must exceed 1");
    long total = 0;
    for (long v : a) {
        if (v <= 0)
            throw std::invalid_argument("partition gadget: entries must be positive");
        total += v;
    }
    if (total % 2 != 0)
        throw std::invalid_argument("partition gadget: odd total");
    return Rational(total);
}

inline std::vector<Rational> as_jobs(const std::vector<long> &a) {
    std::vector<Rational> jobs;
    for (long v : a)
        jobs.emplace_back(v);
    return jobs;
}

} // namespace detail

/// Two machines that run at full speed until A/2, crawl at 1/(fA) through
/// (A/2, A/2 + fA], then recover. Every schedule ends at exactly A/2 or after
/// the slow window, so the makespan separates partitionable lists.
inline Instance partition_gadget_makespan(const std::vector<long> &a, long f) {
    const Rational total = detail::partition_total(a, f);
    const Rational half = total / 2;
    const Rational slow = 1 / (Rational(f) * total);
    const MachineProfile profile = MachineProfile::from_steps({{half, Rational(1)}, {half + Rational(f) * total, slow}});
    return Instance{{profile, profile}, detail::as_jobs(a), 1, slow};
}

/// Two machines at full speed until A/2 and at 1/(n f A) forever after.
inline Instance partition_gadget_totaltime(const std::vector<long> &a, long f) {
    const Rational total = detail::partition_total(a, f);
    const Rational slow = 1 / (Rational(static_cast<long>(a.size())) * Rational(f) * total);
    const MachineProfile profile = MachineProfile::from_steps({{total / 2, Rational(1)}, {std::nullopt, slow}});
    return Instance{{profile, profile}, detail::as_jobs(a), 1, slow};
}

/// Parameters of the named examples. Unset values take each example's default.
struct NamedParams {
    std::optional<Rational> e0;
    std::optional<Rational> x;
    std::optional<Rational> alpha;
};

inline const std::vector<std::string> &named_example_names() {
    static const std::vector<std::string> names{"ls_bad",         "lsect_tight",         "lpt_n2",       "lptect_322",
                                                "spt_vs_sptect", "spt_vs_sptect_plus3", "spt_unbounded"};
    return names;
}

/// The hand-built instances that show where each heuristic goes wrong.
///
///   ls_bad              M1 at e0 and M2 at x over (0,inf); jobs 1,1 (defaults e0=1/2, x=1/100)
///   lsect_tight         3 machines, m1=1: M1 slows to e0 after x+2, M2/M3 slow to e0/(3x)
///                       after x; jobs x,1,1,x,x (defaults e0=1/2, x=10)
///   lpt_n2              M1 full, M2 at e0 < 1/2; jobs 1,1 (default e0=1/4)
///   lptect_322          M1 full, M2 at 3/4; jobs 3,2,2
///   spt_vs_sptect       M1 full on (0,1] then 1/2, M2 full; jobs 1,2,2
///   spt_vs_sptect_plus3 same machines; jobs 1,2,2,3
///   spt_unbounded       M1 full, M2 at 1/alpha (alpha >= 1); jobs 1,1 (default alpha=10)
inline Instance named_example(const std::string &name, const NamedParams &params = {}) {
    auto in_unit = [](const Rational &v, const char *what) {
        if (v <= 0 || v > 1)
            throw std::invalid_argument(std::string(what) + " out of (0,1]");
    };
    const MachineProfile full = MachineProfile::full_capacity();
    const MachineProfile dip = MachineProfile::from_steps({{Rational(1), Rational(1)}, {std::nullopt, Rational(1, 2)}});

    if (name == "ls_bad") {
        const Rational e0 = params.e0.value_or(Rational(1, 2));
        const Rational x = params.x.value_or(Rational(1, 100));
        in_unit(e0, "e0");
        in_unit(x, "x");
        return Instance{{MachineProfile::constant(e0), MachineProfile::constant(x)}, {1, 1}, 1, e0};
    }
    if (name == "lsect_tight") {
        const Rational e0 = params.e0.value_or(Rational(1, 2));
        const Rational x = params.x.value_or(Rational(10));
        in_unit(e0, "e0");
        if (x <= 0)
            throw std::invalid_argument("x must be positive");
        const Rational slow = e0 / (3 * x);
        in_unit(slow, "e0/(3x)");
        const MachineProfile first = MachineProfile::from_steps({{x + 2, Rational(1)}, {std::nullopt, e0}});
        const MachineProfile other = MachineProfile::from_steps({{x, Rational(1)}, {std::nullopt, slow}});
        return Instance{{first, other, other}, {x, 1, 1, x, x}, 1, e0};
    }
    if (name == "lpt_n2") {
        const Rational e0 = params.e0.value_or(Rational(1, 4));
        if (e0 <= 0 || e0 >= Rational(1, 2))
            throw std::invalid_argument("e0 must lie in (0,1/2)");
        return Instance{{full, MachineProfile::constant(e0)}, {1, 1}, 2, e0};
    }
    if (name == "lptect_322")
        return Instance{{full, MachineProfile::constant(Rational(3, 4))}, {3, 2, 2}, 2, Rational(3, 4)};
    if (name == "spt_vs_sptect")
        return Instance{{dip, full}, {1, 2, 2}, 2, Rational(1, 2)};
    if (name == "spt_vs_sptect_plus3")
        return Instance{{dip, full}, {1, 2, 2, 3}, 2, Rational(1, 2)};
    if (name == "spt_unbounded") {
        const Rational alpha = params.alpha.value_or(Rational(10));
        if (alpha < 1)
            throw std::invalid_argument("alpha must be at least 1");
        return Instance{{full, MachineProfile::constant(1 / alpha)}, {1, 1}, 1, Rational(1)};
    }
    throw std::invalid_argument("unknown example '" + name + "'");
}

struct RandomSpec {
    std::size_t n = 6;
    std::size_t m = 2;
    std::size_t m1 = 2;
    Rational e0{1, 2};
    long p_max = 10;
    std::size_t breakpoints_min = 0;  // finite interval ends per machine
    std::size_t breakpoints_max = 3;
    std::uint64_t seed = 1;
};

/// Deterministic in the seed. Processing times are k/q with q in {1, 2, 4} and
/// value in (0, p_max]; interval ends have denominators dividing 8; ratios have
/// denominators up to 64, drawn from [e0, 1] on the first m1 machines and from
/// (0, 1] elsewhere. A profile ends at full capacity or, with probability 1/2,
/// with an unbounded shared interval.
inline Instance random_instance(const RandomSpec &spec) {
    if (spec.n < 1 || spec.m < 1 || spec.m1 < 1 || spec.m1 > spec.m)
        throw std::invalid_argument("random_instance: need n, m >= 1 and 1 <= m1 <= m");
    if (spec.e0 <= 0 || spec.e0 > 1)
        throw std::invalid_argument("random_instance: e0 out of (0,1]");
    if (spec.p_max < 1 || spec.breakpoints_min > spec.breakpoints_max)
        throw std::invalid_argument("random_instance: bad p_max or breakpoint range");

    std::mt19937_64 rng(spec.seed);
    // inclusive [lo, hi]; raw engine output keeps the stream portable
    auto uniform = [&rng](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

    Instance inst;
    inst.m1 = spec.m1;
    inst.e0 = spec.e0;

    for (std::size_t j = 0; j < spec.n; ++j) {
        const long q = 1L << uniform(0, 2);
        inst.jobs.emplace_back(uniform(1, spec.p_max * q), q);
    }

    const long horizon_units = std::max<long>(1, spec.p_max * static_cast<long>((spec.n + spec.m - 1) / spec.m));
    for (std::size_t i = 0; i < spec.m; ++i) {
        const bool bounded = i < spec.m1;
        auto ratio = [&] {
            const long den = uniform(1, 64);
            const long lo = bounded ? sharedsched::ceil(spec.e0 * den).convert_to<long>() : 1;
            return Rational(uniform(std::max(lo, 1L), den), den);
        };
        const auto count = static_cast<std::size_t>(
            uniform(static_cast<long>(spec.breakpoints_min), static_cast<long>(spec.breakpoints_max)));
        MachineProfile profile;
        Rational cursor(0);
        for (std::size_t k = 0; k < count; ++k) {
            const Rational end = cursor + Rational(uniform(1, 8 * horizon_units), 8);
            profile.intervals.push_back(SharedInterval{cursor, end, ratio()});
            cursor = end;
        }
        if (count == 0 || uniform(0, 1) == 1)
            profile.intervals.push_back(SharedInterval{cursor, std::nullopt, count == 0 && uniform(0, 1) ? Rational(1) : ratio()});
        inst.machines.push_back(std::move(profile));
    }
    return inst;
}

} // namespace sharedsched
