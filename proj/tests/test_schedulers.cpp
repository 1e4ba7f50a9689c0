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

#include <gtest/gtest.h>

#include "sharedsched/bounds.hpp"
#include "sharedsched/instance_gen.hpp"
#include "sharedsched/oracle.hpp"
#include "sharedsched/schedulers.hpp"

namespace sharedsched {
namespace {

TEST(JobOrder, StableTies) {
    const std::vector<Rational> jobs{2, 1, 2, 3, 1};
    EXPECT_EQ(job_order(jobs, OrderRule::Lpt), (std::vector<std::size_t>{3, 0, 2, 1, 4}));
    EXPECT_EQ(job_order(jobs, OrderRule::Spt), (std::vector<std::size_t>{1, 4, 0, 2, 3}));
    EXPECT_EQ(job_order(jobs, OrderRule::Input), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(ListSchedule, EarliestStartSpreadsOntoSlowMachine) {
    const Instance inst = named_example("ls_bad");
    const Schedule s = ls(inst);
    EXPECT_EQ(s.assignment, (Assignment{{0}, {1}}));
    EXPECT_EQ(s.makespan, 100);
    EXPECT_EQ(ls_ect(inst).makespan, 4);
}

TEST(ListSchedule, LptEctOnThreeTwoTwo) {
    const Schedule s = lpt_ect(named_example("lptect_322"));
    EXPECT_EQ(s.makespan, 5);
    EXPECT_EQ(s.assignment, (Assignment{{0, 2}, {1}}));
}

TEST(ListSchedule, SptAgainstSptEct) {
    const Instance three = named_example("spt_vs_sptect");
    EXPECT_EQ(spt(three).total_completion, 8);
    EXPECT_EQ(spt_ect(three).total_completion, 7);
    const Instance four = named_example("spt_vs_sptect_plus3");
    EXPECT_EQ(spt(four).total_completion, 13);
    EXPECT_EQ(spt_ect(four).total_completion, 14);
}

TEST(ListSchedule, LptOnTwoUnitJobs) {
    const NamedParams params{Rational(1, 4), std::nullopt, std::nullopt};
    const Instance inst = named_example("lpt_n2", params);
    EXPECT_EQ(lpt(inst).makespan, 4);
    EXPECT_EQ(lpt_ect(inst).makespan, 2);
}

TEST(ListSchedule, LsEctTightnessFamily) {
    for (const long x : {10L, 100L}) {
        NamedParams params;
        params.x = Rational(x);
        const Instance inst = named_example("lsect_tight", params);
        const Rational e0(1, 2);
        EXPECT_EQ(ls_ect(inst).makespan, Rational(x + 2) + Rational(2 * x - 2) / e0);
    }
}

TEST(ListSchedule, MachineTiesGoToLowestIndex) {
    const Instance inst{{MachineProfile::full_capacity(), MachineProfile::full_capacity()}, {1, 1, 1}, 2, Rational(1)};
    EXPECT_EQ(ls(inst).assignment, (Assignment{{0, 2}, {1}}));
    EXPECT_EQ(ls_ect(inst).assignment, (Assignment{{0, 2}, {1}}));
}

RandomSpec small_spec(std::uint64_t seed, std::size_t m, std::size_t m1, Rational e0) {
    RandomSpec spec;
    spec.n = 1 + seed % 7;
    spec.m = m;
    spec.m1 = m1;
    spec.e0 = e0;
    spec.seed = seed;
    return spec;
}

TEST(ListSchedule, EctPlacementIsEarliestAtEveryStep) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Instance inst = random_instance(small_spec(seed, 3, 1, Rational(1, 3)));
        const auto tables = build_tables(inst);
        int steps = 0;
        const PlacementObserver observer = [&](std::size_t, std::size_t machine, std::span<const Rational> c) {
            ++steps;
            for (const auto &other : c)
                EXPECT_LE(c[machine], other);
        };
        for (const OrderRule order : {OrderRule::Input, OrderRule::Lpt, OrderRule::Spt})
            list_schedule(inst, tables, order, PlacementRule::EarliestCompletion, observer);
        EXPECT_EQ(steps, static_cast<int>(3 * inst.jobs.size()));
    }
}

TEST(ListSchedule, ClassicalDegeneration) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Instance inst = random_instance(small_spec(seed, 1 + seed % 3, 1 + seed % 3, Rational(1)));
        EXPECT_EQ(ls(inst).assignment, ls_ect(inst).assignment);
        EXPECT_EQ(spt_ect(inst).total_completion, exact_optimal(inst, Objective::TotalCompletion).objective_value);
    }
}

TEST(ListSchedule, RatioBoundsAgainstOracle) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const std::size_t m = 2 + seed % 2;
        const Rational e0(1, 2 + static_cast<long>(seed % 3));
        for (const std::size_t m1 : {std::size_t{1}, m - 1, m}) {
            const Instance inst = random_instance(small_spec(seed, m, m1, e0));
            const Rational opt = exact_optimal(inst, Objective::Makespan).objective_value;
            const std::size_t n = inst.jobs.size();
            if (m1 == m) {
                EXPECT_LE(ls(inst).makespan, bounds::list_scheduling(e0) * opt);
                EXPECT_LE(lpt(inst).makespan, bounds::list_scheduling(e0) * opt);
            }
            EXPECT_LE(ls_ect(inst).makespan, bounds::list_scheduling_ect(m, m1, e0) * opt);
            EXPECT_LE(lpt_ect(inst).makespan, bounds::lpt_ect(m, m1, n, e0) * opt);
            const Rational opt_total = exact_optimal(inst, Objective::TotalCompletion).objective_value;
            EXPECT_LE(spt_ect(inst).total_completion, bounds::spt_ect(m, m1, e0) * opt_total);
        }
    }
}

} // namespace
} // namespace sharedsched
