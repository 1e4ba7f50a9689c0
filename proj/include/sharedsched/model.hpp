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
#include <string>
#include <vector>

#include "sharedsched/capacity.hpp"
#include "sharedsched/profile.hpp"
#include "sharedsched/rational.hpp"

namespace sharedsched {

enum class Objective { Makespan, TotalCompletion };

inline const char *to_string(Objective obj) { return obj == Objective::Makespan ? "makespan" : "totaltime"; }

/// m machine profiles, n primary jobs, and the declaration that the first m1
/// machines never drop below sharing ratio e0.
struct Instance {
    std::vector<MachineProfile> machines;
    std::vector<Rational> jobs;
    std::size_t m1 = 1;
    Rational e0{1};

    std::size_t machine_count() const { return machines.size(); }
    std::size_t job_count() const { return jobs.size(); }
};

/// Number of intervals with ratio below 1 across all machines.
inline std::size_t shared_interval_count(const Instance &inst) {
    std::size_t count = 0;
    for (const auto &machine : inst.machines)
        count += static_cast<std::size_t>(std::count_if(machine.intervals.begin(), machine.intervals.end(),
                                                        [](const SharedInterval &iv) { return iv.ratio < 1; }));
    return count;
}

struct ValidationError {
    std::string code;
    std::string message;
};

/// Collects every violated invariant; an empty result means the instance is valid.
inline std::vector<ValidationError> validate_instance(const Instance &inst) {
    std::vector<ValidationError> errors;
    auto report = [&](std::string code, std::string message) {
        errors.push_back(ValidationError{std::move(code), std::move(message)});
    };

    if (inst.machines.empty())
        report("no_machines", "instance has no machines");
    if (inst.jobs.empty())
        report("no_jobs", "instance has no jobs");
    if (inst.m1 < 1 || inst.m1 > inst.machines.size())
        report("m1_range", "m1 must lie in [1, m]");
    if (inst.e0 <= 0 || inst.e0 > 1)
        report("e0_range", "e0 out of (0,1]");

    for (std::size_t j = 0; j < inst.jobs.size(); ++j)
        if (inst.jobs[j] <= 0)
            report("job_length", "job " + std::to_string(j + 1) + ": processing time must be positive");

    for (std::size_t i = 0; i < inst.machines.size(); ++i) {
        const auto &intervals = inst.machines[i].intervals;
        const std::string where = "machine " + std::to_string(i + 1);
        if (intervals.empty()) {
            report("empty_profile", where + ": no intervals");
            continue;
        }
        if (intervals.front().start != 0)
            report("profile_origin", where + ": first interval must start at 0");
        for (std::size_t k = 0; k < intervals.size(); ++k) {
            const SharedInterval &iv = intervals[k];
            const std::string at = where + ", interval " + std::to_string(k + 1);
            if (iv.ratio <= 0 || iv.ratio > 1)
                report("ratio_range", at + ": ratio out of (0,1]");
            if (iv.start < 0)
                report("interval_order", at + ": negative start");
            if (iv.end && *iv.end <= iv.start)
                report("interval_order", at + ": end must exceed start");
            if (!iv.end && k + 1 != intervals.size())
                report("unbounded_not_last", at + ": only the last interval may be unbounded");
            if (k > 0 && intervals[k - 1].end && *intervals[k - 1].end != iv.start)
                report("contiguity", at + ": does not start where the previous interval ends");
            if (i < inst.m1 && iv.ratio < inst.e0)
                report("e0_bound", at + ": e0 bound violated");
        }
    }
    return errors;
}

class InvalidInstance : public std::invalid_argument {
  public:
    explicit InvalidInstance(std::vector<ValidationError> errors)
        : std::invalid_argument(summary(errors)), errors_(std::move(errors)) {}

    const std::vector<ValidationError> &errors() const { return errors_; }

  private:
    static std::string summary(const std::vector<ValidationError> &errors) {
        std::string out = "invalid instance";
        for (const auto &e : errors)
            out += "; " + e.message;
        return out;
    }
    std::vector<ValidationError> errors_;
};

inline void require_valid(const Instance &inst) {
    auto errors = validate_instance(inst);
    if (!errors.empty())
        throw InvalidInstance(std::move(errors));
}

inline std::vector<CapacityTable> build_tables(const Instance &inst) {
    std::vector<CapacityTable> tables;
    tables.reserve(inst.machines.size());
    for (const auto &machine : inst.machines)
        tables.emplace_back(machine);
    return tables;
}

/// Per-machine job order; job indices are 0-based.
using Assignment = std::vector<std::vector<std::size_t>>;

struct Schedule {
    Assignment assignment;
    std::vector<Rational> completions;
    Rational makespan{0};
    Rational total_completion{0};

    const Rational &value(Objective obj) const { return obj == Objective::Makespan ? makespan : total_completion; }
};

/// Runs each machine's jobs back to back from time 0.
inline Schedule evaluate(const Instance &inst, std::span<const CapacityTable> tables, Assignment assignment) {
    const std::size_t n = inst.jobs.size();
    if (assignment.size() != inst.machines.size())
        throw std::invalid_argument("assignment must list one job sequence per machine");
    std::vector<bool> seen(n, false);
    for (const auto &sequence : assignment)
        for (std::size_t j : sequence) {
            if (j >= n)
                throw std::invalid_argument("assignment references unknown job " + std::to_string(j + 1));
            if (seen[j])
                throw std::invalid_argument("job " + std::to_string(j + 1) + " assigned twice");
            seen[j] = true;
        }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::invalid_argument("assignment leaves a job unscheduled");

    Schedule schedule;
    schedule.completions.assign(n, Rational(0));
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        Rational load(0);
        for (std::size_t j : assignment[i]) {
            load += inst.jobs[j];
            const Rational c = tables[i].finish_time(load);
            if (c > schedule.makespan)
                schedule.makespan = c;
            schedule.total_completion += c;
            schedule.completions[j] = c;
        }
    }
    schedule.assignment = std::move(assignment);
    return schedule;
}

inline Schedule evaluate(const Instance &inst, Assignment assignment) {
    const auto tables = build_tables(inst);
    return evaluate(inst, tables, std::move(assignment));
}

} // namespace sharedsched
