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

#include "sharedsched/instance_gen.hpp"
#include "sharedsched/io.hpp"
#include "sharedsched/oracle.hpp"

namespace sharedsched {
namespace {

TEST(PartitionGadget, MakespanConstruction) {
    const Instance inst = partition_gadget_makespan({1, 1, 2}, 2);
    ASSERT_EQ(inst.machines.size(), 2u);
    const auto &iv = inst.machines[1].intervals;
    ASSERT_EQ(iv.size(), 2u);
    EXPECT_EQ(*iv[0].end, 2);
    EXPECT_EQ(iv[0].ratio, 1);
    EXPECT_EQ(*iv[1].end, 10);
    EXPECT_EQ(iv[1].ratio, Rational(1, 8));
    EXPECT_TRUE(validate_instance(inst).empty());
    EXPECT_EQ(exact_optimal(inst, Objective::Makespan).objective_value, 2);
}

TEST(PartitionGadget, MakespanGapWithoutPartition) {
    const Instance inst = partition_gadget_makespan({1, 3}, 2);
    EXPECT_GT(exact_optimal(inst, Objective::Makespan).objective_value, 4);
}

TEST(PartitionGadget, RejectsBadInput) {
    EXPECT_THROW(partition_gadget_makespan({1, 1, 1}, 2), std::invalid_argument);
    EXPECT_THROW(partition_gadget_totaltime({1, 1, 1}, 2), std::invalid_argument);
    EXPECT_THROW(partition_gadget_makespan({1, 1}, 1), std::invalid_argument);
    EXPECT_THROW(partition_gadget_makespan({}, 2), std::invalid_argument);
    EXPECT_THROW(partition_gadget_makespan({2, 0}, 2), std::invalid_argument);
}

TEST(PartitionGadget, TotalTime) {
    const Instance yes = partition_gadget_totaltime({1, 1, 2}, 2);
    EXPECT_EQ(yes.machines[0].intervals[1].ratio, Rational(1, 24));
    EXPECT_LE(exact_optimal(yes, Objective::TotalCompletion).objective_value, 6);
    EXPECT_GT(exact_optimal(partition_gadget_totaltime({1, 3}, 2), Objective::TotalCompletion).objective_value, 8);
    EXPECT_EQ(exact_optimal(partition_gadget_totaltime({2, 2}, 3), Objective::TotalCompletion).objective_value, 4);
}

TEST(NamedExample, Shapes) {
    const Instance lpt = named_example("lptect_322");
    EXPECT_EQ(lpt.jobs, (std::vector<Rational>{3, 2, 2}));
    EXPECT_EQ(lpt.machines[1].intervals[0].ratio, Rational(3, 4));
    EXPECT_TRUE(lpt.machines[1].intervals[0].unbounded());

    const Instance spt = named_example("spt_vs_sptect");
    EXPECT_EQ(spt.jobs, (std::vector<Rational>{1, 2, 2}));
    EXPECT_EQ(*spt.machines[0].intervals[0].end, 1);
    EXPECT_EQ(spt.machines[0].intervals[1].ratio, Rational(1, 2));
    EXPECT_EQ(spt.machines[1].intervals[0].ratio, 1);

    const Instance bad = named_example("ls_bad");
    EXPECT_EQ(bad.machines[0].intervals[0].ratio, Rational(1, 2));
    EXPECT_EQ(bad.machines[1].intervals[0].ratio, Rational(1, 100));
    EXPECT_EQ(bad.jobs, (std::vector<Rational>{1, 1}));
}

TEST(NamedExample, AllValid) {
    for (const auto &name : named_example_names())
        EXPECT_TRUE(validate_instance(named_example(name)).empty()) << name;
}

TEST(NamedExample, Errors) {
    EXPECT_THROW(named_example("nope"), std::invalid_argument);
    EXPECT_THROW(named_example("spt_unbounded", {std::nullopt, std::nullopt, Rational(1, 2)}), std::invalid_argument);
    EXPECT_THROW(named_example("ls_bad", {Rational(0), std::nullopt, std::nullopt}), std::invalid_argument);
    EXPECT_THROW(named_example("lpt_n2", {Rational(1, 2), std::nullopt, std::nullopt}), std::invalid_argument);
}

TEST(RandomInstance, DeterministicAndValid) {
    RandomSpec spec;
    spec.n = 6;
    spec.m = 3;
    spec.m1 = 2;
    spec.seed = 42;
    EXPECT_EQ(io::dump_instance(random_instance(spec)), io::dump_instance(random_instance(spec)));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        spec.seed = seed;
        const Instance inst = random_instance(spec);
        EXPECT_TRUE(validate_instance(inst).empty()) << seed;
        EXPECT_NO_THROW(check_limits(inst, OracleLimits{}));
    }
}

TEST(RandomInstance, UnitRangeGivesFullCapacity) {
    RandomSpec spec;
    spec.m = 3;
    spec.m1 = 3;
    spec.e0 = 1;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        spec.seed = seed;
        for (const auto &machine : random_instance(spec).machines)
            for (const auto &iv : machine.intervals)
                EXPECT_EQ(iv.ratio, 1);
    }
}

} // namespace
} // namespace sharedsched
