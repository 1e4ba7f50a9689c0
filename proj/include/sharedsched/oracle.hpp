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
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharedsched/capacity.hpp"
#include "sharedsched/model.hpp"
#include "sharedsched/schedulers.hpp"

namespace sharedsched {

struct OracleLimits {
    std::size_t max_n = 10;
    std::size_t max_m = 4;
};

class OracleLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    Schedule best;
    Rational objective_value{0};
    std::size_t states_explored = 0;
};

inline void check_limits(const Instance &inst, const OracleLimits &limits) {
    if (inst.jobs.size() > limits.max_n || inst.machines.size() > limits.max_m)
        throw OracleLimitError("instance exceeds oracle limits (n=" + std::to_string(inst.jobs.size()) + " > " +
                               std::to_string(limits.max_n) + " or m=" + std::to_string(inst.machines.size()) +
                               " > " + std::to_string(limits.max_m) + ")");
}

/// Exhaustive optimum over all m^n job-to-machine assignments.
///
/// Within a machine, makespan ignores job order (completion depends only on
/// total work) and total completion uses SPT order, which minimizes every
/// prefix of the machine's nondecreasing work-to-time map. Assignments are
/// visited lexicographically (job 1's machine most significant) and only a
/// strict improvement replaces the incumbent.
inline OracleResult exact_optimal(const Instance &inst, Objective obj, const OracleLimits &limits = {}) {
    check_limits(inst, limits);
    const std::size_t n = inst.jobs.size();
    const std::size_t m = inst.machines.size();
    const auto tables = build_tables(inst);
    const std::vector<std::size_t> spt = job_order(inst.jobs, OrderRule::Spt);

    std::vector<std::size_t> machine_of(n, 0);
    std::vector<Rational> load(m, Rational(0));
    std::vector<Rational> running(m, Rational(0));
    std::optional<Rational> best_value;
    std::vector<std::size_t> best_choice;
    std::size_t explored = 0;

    auto leaf_value = [&]() -> Rational {
        if (obj == Objective::Makespan) {
            Rational worst(0);
            for (std::size_t i = 0; i < m; ++i)
                worst = std::max(worst, tables[i].finish_time(load[i]));
            return worst;
        }
        std::fill(running.begin(), running.end(), Rational(0));
        Rational total(0);
        for (std::size_t j : spt) {
            const std::size_t i = machine_of[j];
            running[i] += inst.jobs[j];
            total += tables[i].finish_time(running[i]);
        }
        return total;
    };

    auto descend = [&](auto &&self, std::size_t job) -> void {
        if (job == n) {
            ++explored;
            Rational value = leaf_value();
            if (!best_value || value < *best_value) {
                best_value = std::move(value);
                best_choice = machine_of;
            }
            return;
        }
        for (std::size_t i = 0; i < m; ++i) {
            machine_of[job] = i;
            load[i] += inst.jobs[job];
            self(self, job + 1);
            load[i] -= inst.jobs[job];
        }
    };
    descend(descend, 0);

    Assignment assignment(m);
    for (std::size_t j : spt)
        assignment[best_choice[j]].push_back(j);
    OracleResult result;
    result.best = evaluate(inst, tables, std::move(assignment));
    result.objective_value = *best_value;
    result.states_explored = explored;
    return result;
}

struct SptCheckResult {
    bool ok = true;
    std::string counterexample;
};

/// For every machine and every subset of jobs (hence every assignment), checks
/// that SPT order minimizes the machine's total completion time over all
/// permutations of that subset.
inline SptCheckResult verify_spt_within_machine(const Instance &inst, const OracleLimits &limits = {8, 4}) {
    check_limits(inst, limits);
    const std::size_t n = inst.jobs.size();
    const auto tables = build_tables(inst);
    const std::vector<std::size_t> spt = job_order(inst.jobs, OrderRule::Spt);

    auto cost = [&](const CapacityTable &table, const std::vector<std::size_t> &sequence) {
        Rational load(0), total(0);
        for (std::size_t j : sequence) {
            load += inst.jobs[j];
            total += table.finish_time(load);
        }
        return total;
    };

    for (std::size_t i = 0; i < tables.size(); ++i) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<std::size_t> sequence;
            for (std::size_t j : spt)
                if (mask & (std::size_t{1} << j))
                    sequence.push_back(j);
            const Rational spt_cost = cost(tables[i], sequence);
            std::vector<std::size_t> perm = sequence;
            std::sort(perm.begin(), perm.end());
            do {
                const Rational c = cost(tables[i], perm);
                if (c < spt_cost) {
                    std::ostringstream report;
                    report << "machine " << i + 1 << ": order";
                    for (std::size_t j : perm)
                        report << ' ' << j + 1;
                    report << " costs " << to_string(c) << " < SPT cost " << to_string(spt_cost);
                    return SptCheckResult{false, report.str()};
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return {};
}

/// Minimum total completion time on k identical full-capacity machines (SPT,
/// round robin).
inline Rational identical_machines_spt_total(std::vector<Rational> jobs, std::size_t k) {
    std::sort(jobs.begin(), jobs.end());
    std::vector<Rational> finish(k, Rational(0));
    Rational total(0);
    for (std::size_t r = 0; r < jobs.size(); ++r) {
        finish[r % k] += jobs[r];
        total += finish[r % k];
    }
    return total;
}

/// OPT on m1 identical machines <= ceil(m/m1) * OPT on m identical machines.
inline bool check_fewer_machines_bound(const std::vector<Rational> &jobs, std::size_t m1, std::size_t m) {
    if (m1 < 1 || m1 > m)
        throw std::invalid_argument("check_fewer_machines_bound: need 1 <= m1 <= m");
    const long factor = static_cast<long>((m + m1 - 1) / m1);
    return identical_machines_spt_total(jobs, m1) <= Rational(factor) * identical_machines_spt_total(jobs, m);
}

} // namespace sharedsched
