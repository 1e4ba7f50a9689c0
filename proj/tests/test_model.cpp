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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "sharedsched/instance_gen.hpp"
#include "sharedsched/model.hpp"

namespace sharedsched {
namespace {

bool has_code(const std::vector<ValidationError> &errors, const std::string &code) {
    return std::any_of(errors.begin(), errors.end(), [&](const ValidationError &e) { return e.code == code; });
}

Instance scaled(Instance inst, const Rational &c) {
    for (auto &p : inst.jobs)
        p *= c;
    for (auto &machine : inst.machines)
        for (auto &iv : machine.intervals) {
            iv.start *= c;
            if (iv.end)
                *iv.end *= c;
        }
    return inst;
}

TEST(Validate, DegenerateFullCapacityIsValid) {
    const Instance inst{{MachineProfile::full_capacity()}, {1}, 1, Rational(1)};
    EXPECT_TRUE(validate_instance(inst).empty());
}

TEST(Validate, ZeroRatioRejected) {
    const Instance inst{{MachineProfile::full_capacity(), MachineProfile::constant(Rational(0))}, {1}, 1, Rational(1)};
    const auto errors = validate_instance(inst);
    ASSERT_TRUE(has_code(errors, "ratio_range"));
    EXPECT_NE(errors.front().message.find("ratio out of (0,1]"), std::string::npos);
}

TEST(Validate, E0BoundViolatedOnBoundedMachine) {
    const MachineProfile profile =
        MachineProfile::from_steps({{Rational(1), Rational(1)}, {std::nullopt, Rational(1, 4)}});
    const Instance inst{{profile}, {1}, 1, Rational(1, 2)};
    const auto errors = validate_instance(inst);
    ASSERT_EQ(errors.size(), 1u);
    EXPECT_NE(errors[0].message.find("e0 bound violated"), std::string::npos);
}

TEST(Validate, UnboundedMachinesAreNotChecked) {
    const Instance inst{{MachineProfile::full_capacity(), MachineProfile::constant(Rational(1, 100))}, {1}, 1,
                        Rational(1, 2)};
    EXPECT_TRUE(validate_instance(inst).empty());
}

TEST(Validate, ReportsEveryViolation) {
    Instance inst;
    inst.machines.push_back(MachineProfile{{SharedInterval{Rational(1), Rational(2), Rational(3, 2)},
                                            SharedInterval{Rational(3), std::nullopt, Rational(1)},
                                            SharedInterval{Rational(4), Rational(5), Rational(1)}}});
    inst.jobs = {Rational(0)};
    inst.m1 = 2;
    inst.e0 = Rational(2);
    const auto errors = validate_instance(inst);
    for (const char *code : {"profile_origin", "ratio_range", "contiguity", "unbounded_not_last", "m1_range",
                             "e0_range", "job_length"})
        EXPECT_TRUE(has_code(errors, code)) << code;
}

TEST(Evaluate, FullCapacityIsPrefixSum) {
    const Instance inst{{MachineProfile::full_capacity()}, {1, 2}, 1, Rational(1)};
    const Schedule s = evaluate(inst, {{0, 1}});
    EXPECT_EQ(s.completions[0], 1);
    EXPECT_EQ(s.completions[1], 3);
    EXPECT_EQ(s.makespan, 3);
    EXPECT_EQ(s.total_completion, 4);
}

TEST(Evaluate, SlowdownAfterFirstUnit) {
    const MachineProfile dip =
        MachineProfile::from_steps({{Rational(1), Rational(1)}, {std::nullopt, Rational(1, 2)}});
    const Instance inst{{dip}, {1, 2}, 1, Rational(1, 2)};
    const Schedule s = evaluate(inst, {{0, 1}});
    EXPECT_EQ(s.completions[0], 1);
    EXPECT_EQ(s.completions[1], 5);
}

TEST(Evaluate, ConstantRatio) {
    const Instance inst{{MachineProfile::full_capacity(), MachineProfile::constant(Rational(3, 4))}, {2}, 2,
                        Rational(3, 4)};
    const Schedule s = evaluate(inst, {{}, {0}});
    EXPECT_EQ(s.completions[0], Rational(8, 3));
}

TEST(Evaluate, RejectsBadPartitions) {
    const Instance inst{{MachineProfile::full_capacity(), MachineProfile::full_capacity()}, {1, 2}, 2, Rational(1)};
    EXPECT_THROW(evaluate(inst, {{0, 0}, {1}}), std::invalid_argument);
    EXPECT_THROW(evaluate(inst, {{0}, {}}), std::invalid_argument);
    EXPECT_THROW(evaluate(inst, {{0}, {5}}), std::invalid_argument);
    EXPECT_THROW(evaluate(inst, {{0, 1}}), std::invalid_argument);
}

class EvaluateProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(EvaluateProperties, Invariants) {
    RandomSpec spec;
    spec.n = 7;
    spec.m = 3;
    spec.m1 = 2;
    spec.seed = GetParam();
    const Instance inst = random_instance(spec);

    std::mt19937_64 rng(GetParam());
    Assignment assignment(inst.machines.size());
    for (std::size_t j = 0; j < inst.jobs.size(); ++j)
        assignment[rng() % inst.machines.size()].push_back(j);
    for (auto &seq : assignment)
        std::shuffle(seq.begin(), seq.end(), rng);

    const Schedule s = evaluate(inst, assignment);
    const Schedule again = evaluate(inst, assignment);
    EXPECT_EQ(s.completions, again.completions);

    Rational total(0), worst(0);
    for (const auto &c : s.completions) {
        total += c;
        worst = std::max(worst, c);
    }
    EXPECT_EQ(s.total_completion, total);
    EXPECT_EQ(s.makespan, worst);

    for (const auto &seq : s.assignment)
        for (std::size_t k = 1; k < seq.size(); ++k)
            EXPECT_LT(s.completions[seq[k - 1]], s.completions[seq[k]]);

    const Rational c(7, 3);
    const Schedule big = evaluate(scaled(inst, c), assignment);
    for (std::size_t j = 0; j < inst.jobs.size(); ++j)
        EXPECT_EQ(big.completions[j], c * s.completions[j]);

    Instance classical = inst;
    for (auto &machine : classical.machines)
        machine = MachineProfile::full_capacity();
    const Schedule flat = evaluate(classical, assignment);
    for (const auto &seq : assignment) {
        Rational prefix(0);
        for (std::size_t j : seq) {
            prefix += inst.jobs[j];
            EXPECT_EQ(flat.completions[j], prefix);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, EvaluateProperties, ::testing::Range<std::uint64_t>(1, 41));

} // namespace
} // namespace sharedsched
