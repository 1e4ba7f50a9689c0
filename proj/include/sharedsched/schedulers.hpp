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
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "sharedsched/capacity.hpp"
#include "sharedsched/model.hpp"

namespace sharedsched {

enum class OrderRule { Input, Lpt, Spt };

enum class PlacementRule {
    EarliestStart,      // machine whose last job finishes first
    EarliestCompletion, // machine on which the job would complete first
};

/// Job indices in list order. LPT is nonincreasing, SPT nondecreasing; equal
/// lengths keep index order.
inline std::vector<std::size_t> job_order(std::span<const Rational> jobs, OrderRule rule) {
    std::vector<std::size_t> order(jobs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (rule == OrderRule::Lpt)
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return jobs[a] > jobs[b]; });
    else if (rule == OrderRule::Spt)
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return jobs[a] < jobs[b]; });
    return order;
}

/// Called after every placement with the completion the job would have had on
/// each machine (EarliestCompletion only; empty span otherwise).
using PlacementObserver = std::function<void(std::size_t job, std::size_t machine, std::span<const Rational> candidates)>;

/// Running list-scheduling state: per machine the assigned work P_i, the
/// finish time f_i of its last job, and its job sequence.
class ListState {
  public:
    ListState(std::span<const CapacityTable> tables)
        : tables_(tables), load_(tables.size(), Rational(0)), finish_(tables.size(), Rational(0)),
          assignment_(tables.size()) {}

    /// Appends `job` to `machine` unconditionally.
    void assign(std::size_t job, const Rational &length, std::size_t machine) {
        load_[machine] += length;
        finish_[machine] = tables_[machine].finish_time(load_[machine]);
        assignment_[machine].push_back(job);
    }

    /// Places `job` by rule and returns the chosen machine; ties go to the
    /// lowest machine index.
    std::size_t place(std::size_t job, const Rational &length, PlacementRule rule,
                      const PlacementObserver *observer = nullptr) {
        std::size_t best = 0;
        if (rule == PlacementRule::EarliestStart) {
            for (std::size_t i = 1; i < finish_.size(); ++i)
                if (finish_[i] < finish_[best])
                    best = i;
            assign(job, length, best);
            if (observer && *observer)
                (*observer)(job, best, {});
            return best;
        }
        candidates_.resize(finish_.size());
        for (std::size_t i = 0; i < finish_.size(); ++i) {
            candidates_[i] = tables_[i].finish_time(load_[i] + length);
            if (candidates_[i] < candidates_[best])
                best = i;
        }
        load_[best] += length;
        finish_[best] = candidates_[best];
        assignment_[best].push_back(job);
        if (observer && *observer)
            (*observer)(job, best, candidates_);
        return best;
    }

    const std::vector<Rational> &loads() const { return load_; }
    const std::vector<Rational> &finish_times() const { return finish_; }
    const Assignment &assignment() const { return assignment_; }
    Assignment release() { return std::move(assignment_); }

    Rational makespan() const { return *std::max_element(finish_.begin(), finish_.end()); }

  private:
    std::span<const CapacityTable> tables_;
    std::vector<Rational> load_;
    std::vector<Rational> finish_;
    Assignment assignment_;
    std::vector<Rational> candidates_;
};

inline Schedule list_schedule(const Instance &inst, std::span<const CapacityTable> tables, OrderRule order,
                              PlacementRule place, const PlacementObserver &observer = {}) {
    ListState state(tables);
    for (std::size_t j : job_order(inst.jobs, order))
        state.place(j, inst.jobs[j], place, &observer);
    return evaluate(inst, tables, state.release());
}

inline Schedule list_schedule(const Instance &inst, OrderRule order, PlacementRule place) {
    const auto tables = build_tables(inst);
    return list_schedule(inst, tables, order, place);
}

inline Schedule ls(const Instance &inst) { return list_schedule(inst, OrderRule::Input, PlacementRule::EarliestStart); }
inline Schedule lpt(const Instance &inst) { return list_schedule(inst, OrderRule::Lpt, PlacementRule::EarliestStart); }
inline Schedule spt(const Instance &inst) { return list_schedule(inst, OrderRule::Spt, PlacementRule::EarliestStart); }
inline Schedule ls_ect(const Instance &inst) {
    return list_schedule(inst, OrderRule::Input, PlacementRule::EarliestCompletion);
}
inline Schedule lpt_ect(const Instance &inst) {
    return list_schedule(inst, OrderRule::Lpt, PlacementRule::EarliestCompletion);
}
inline Schedule spt_ect(const Instance &inst) {
    return list_schedule(inst, OrderRule::Spt, PlacementRule::EarliestCompletion);
}

} // namespace sharedsched
