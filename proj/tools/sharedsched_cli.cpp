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

// Command-line front end: solve, compare, experiment, gadget.
//
// Exit codes: 0 success, 2 input error (bad file, invalid instance, bad
// flags), 3 resource limit (oracle or enumeration too large). Errors are
// reported as one JSON object on stderr.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sharedsched/sharedsched.hpp"

namespace {

using namespace sharedsched;
using json = io::json;

constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
    std::vector<ValidationError> details;
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int report_error(const char *kind, const std::string &message, const std::vector<ValidationError> &details = {}) {
    json err{{"error", kind}, {"message", message}};
    if (!details.empty()) {
        json list = json::array();
        for (const auto &d : details)
            list.push_back(json{{"code", d.code}, {"message", d.message}});
        err["details"] = std::move(list);
    }
    std::cerr << err.dump() << "\n";
    return std::string(kind) == "limit" ? kExitLimit : kExitInput;
}

Rational rational_flag(const std::string &text, const char *flag) {
    try {
        return parse_rational(text);
    } catch (const ParseError &e) {
        throw InputError(std::string(flag) + ": " + e.what());
    }
}

Objective objective_flag(const std::string &text) {
    if (text == "makespan")
        return Objective::Makespan;
    if (text == "totaltime")
        return Objective::TotalCompletion;
    throw InputError("--obj must be makespan or totaltime");
}

std::string format(const Rational &r, bool decimal) {
    if (!decimal)
        return to_string(r);
    std::ostringstream out;
    out << std::setprecision(10) << to_double(r);
    return out.str();
}

OracleLimits oracle_limits() {
    OracleLimits limits;
    if (const char *env = std::getenv("SCHED_ORACLE_MAX_N")) {
        try {
            limits.max_n = std::stoul(env);
        } catch (const std::exception &) {
            throw InputError("SCHED_ORACLE_MAX_N must be a nonnegative integer");
        }
    }
    return limits;
}

Instance load_valid(const std::string &path) {
    Instance inst;
    try {
        inst = io::load_instance(path);
    } catch (const ParseError &e) {
        throw InputError(e.what());
    }
    auto errors = validate_instance(inst);
    if (!errors.empty()) {
        InputError err("instance failed validation");
        err.details = std::move(errors);
        throw err;
    }
    return inst;
}

std::string digest(const Instance &inst) {
    // FNV-1a over the canonical serialization
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : io::dump_instance(inst)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

// ---------------------------------------------------------------------------

const std::vector<std::string> kAlgorithms{"ls",  "lpt",     "ls-ect",          "lpt-ect",         "spt",
                                           "spt-ect", "scheme-makespan", "scheme-totaltime", "oracle"};

struct AlgorithmParams {
    std::optional<Rational> epsilon;
    std::optional<std::size_t> d;
    double max_enumeration = 1e7;  // cap on m^d large-job assignments
    OracleLimits limits;
};

struct RunResult {
    Schedule schedule;
    json params = json::object();
};

std::size_t scheme_d(const Instance &inst, const AlgorithmParams &params) {
    std::size_t d;
    if (params.d) {
        d = *params.d;
        if (d > inst.jobs.size())
            throw InputError("--d exceeds the number of jobs");
    } else if (params.epsilon) {
        if (*params.epsilon <= 0 || *params.epsilon >= 1)
            throw InputError("--epsilon must lie in (0,1)");
        d = compute_d(inst.machines.size(), inst.m1, inst.e0, *params.epsilon, inst.jobs.size());
    } else {
        throw InputError("scheme-makespan needs --epsilon or --d");
    }
    const double leaves = std::pow(static_cast<double>(inst.machines.size()), static_cast<double>(d));
    if (leaves > params.max_enumeration)
        throw ResourceLimit("scheme-makespan would enumerate " + std::to_string(leaves) + " assignments");
    return d;
}

RunResult run_algorithm(const std::string &name, const Instance &inst, Objective obj, const AlgorithmParams &params) {
    RunResult result;
    if (name == "ls")
        result.schedule = ls(inst);
    else if (name == "lpt")
        result.schedule = lpt(inst);
    else if (name == "ls-ect")
        result.schedule = ls_ect(inst);
    else if (name == "lpt-ect")
        result.schedule = lpt_ect(inst);
    else if (name == "spt")
        result.schedule = spt(inst);
    else if (name == "spt-ect")
        result.schedule = spt_ect(inst);
    else if (name == "scheme-makespan") {
        const std::size_t d = scheme_d(inst, params);
        result.schedule = makespan_scheme(inst, d);
        result.params["d"] = d;
        if (params.epsilon && !params.d)
            result.params["epsilon"] = to_string(*params.epsilon);
    } else if (name == "scheme-totaltime") {
        if (!params.epsilon)
            throw InputError("scheme-totaltime needs --epsilon");
        try {
            result.schedule = totaltime_scheme(inst, *params.epsilon);
        } catch (const SchemePreconditionError &e) {
            throw InputError(e.what());
        }
        result.params["epsilon"] = to_string(*params.epsilon);
    } else if (name == "oracle") {
        try {
            result.schedule = exact_optimal(inst, obj, params.limits).best;
        } catch (const OracleLimitError &e) {
            throw ResourceLimit(e.what());
        }
    } else {
        throw InputError("unknown algorithm '" + name + "'");
    }
    return result;
}

// ---------------------------------------------------------------------------

struct SolveOptions {
    std::string path;
    std::string algorithm;
    std::string objective = "makespan";
    std::string epsilon;
    std::optional<std::size_t> d;
    bool decimal = false;
};

int cmd_solve(const SolveOptions &opt) {
    const Objective obj = objective_flag(opt.objective);
    const Instance inst = load_valid(opt.path);
    AlgorithmParams params;
    params.limits = oracle_limits();
    params.d = opt.d;
    if (!opt.epsilon.empty())
        params.epsilon = rational_flag(opt.epsilon, "--epsilon");

    const auto start = std::chrono::steady_clock::now();
    RunResult run = run_algorithm(opt.algorithm, inst, obj, params);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    const Schedule &s = run.schedule;
    json report;
    report["instance_digest"] = digest(inst);
    report["algorithm"] = opt.algorithm;
    report["objective"] = to_string(obj);
    report["value"] = to_string(s.value(obj));
    if (opt.decimal)
        report["value_decimal"] = format(s.value(obj), true);
    report["makespan"] = to_string(s.makespan);
    report["total_completion"] = to_string(s.total_completion);
    report["wall_time_ms"] = elapsed.count();
    json assignment = json::array();
    for (const auto &seq : s.assignment) {
        json jobs = json::array();
        for (std::size_t j : seq)
            jobs.push_back(j + 1);
        assignment.push_back(std::move(jobs));
    }
    report["assignment"] = std::move(assignment);
    json completions = json::array();
    for (const auto &c : s.completions)
        completions.push_back(format(c, opt.decimal));
    report["completions"] = std::move(completions);
    report["params"] = std::move(run.params);
    std::cout << report.dump(2) << "\n";
    return 0;
}

struct CompareOptions {
    std::string path;
    std::string objective = "makespan";
    std::string epsilon = "1/2";
    bool decimal = false;
};

int cmd_compare(const CompareOptions &opt) {
    const Objective obj = objective_flag(opt.objective);
    const Instance inst = load_valid(opt.path);
    AlgorithmParams params;
    params.limits = oracle_limits();
    params.epsilon = rational_flag(opt.epsilon, "--epsilon");

    std::optional<Rational> oracle;
    try {
        oracle = exact_optimal(inst, obj, params.limits).objective_value;
    } catch (const OracleLimitError &) {
    }

    std::cout << "algorithm,value,ratio_to_oracle\n";
    for (const auto &name : kAlgorithms) {
        std::optional<Rational> value;
        if (name == "oracle")
            value = oracle;
        else {
            try {
                value = run_algorithm(name, inst, obj, params).schedule.value(obj);
            } catch (const InputError &) {
            } catch (const ResourceLimit &) {
            }
        }
        std::cout << name << ',';
        if (!value) {
            std::cout << (name == "oracle" ? "unavailable" : "n/a") << ',' << (oracle ? "n/a" : "unavailable")
                      << '\n';
            continue;
        }
        std::cout << format(*value, opt.decimal) << ',';
        if (oracle)
            std::cout << format(*value / *oracle, opt.decimal) << '\n';
        else
            std::cout << "unavailable\n";
    }
    return 0;
}

struct ExperimentOptions {
    std::size_t n = 6;
    std::size_t m = 2;
    std::size_t m1 = 2;
    std::string e0 = "1/2";
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    std::string epsilon = "1/2";
    std::string objective = "makespan";
    std::vector<std::string> algorithms;
    long p_max = 10;
    std::size_t bp_min = 0;
    std::size_t bp_max = 3;
    bool with_oracle = false;
    bool decimal = false;
};

std::optional<Rational> guarantee_bound(const std::string &alg, const Instance &inst, const Rational &epsilon) {
    const std::size_t m = inst.machines.size(), m1 = inst.m1, n = inst.jobs.size();
    const Rational &e0 = inst.e0;
    if (alg == "ls" || alg == "lpt")
        return m1 == m ? std::optional<Rational>(bounds::list_scheduling(e0)) : std::nullopt;
    if (alg == "ls-ect")
        return bounds::list_scheduling_ect(m, m1, e0);
    if (alg == "lpt-ect")
        return bounds::lpt_ect(m, m1, n, e0);
    if (alg == "scheme-makespan" || alg == "scheme-totaltime")
        return 1 + epsilon;
    if (alg == "spt-ect")
        return bounds::spt_ect(m, m1, e0);
    return std::nullopt;
}

int cmd_experiment(const ExperimentOptions &opt) {
    const Objective obj = objective_flag(opt.objective);
    RandomSpec spec;
    spec.n = opt.n;
    spec.m = opt.m;
    spec.m1 = opt.m1;
    spec.e0 = rational_flag(opt.e0, "--e0");
    spec.p_max = opt.p_max;
    spec.breakpoints_min = opt.bp_min;
    spec.breakpoints_max = opt.bp_max;
    if (spec.n < 1 || spec.m < 1 || spec.m1 < 1 || spec.m1 > spec.m || spec.e0 <= 0 || spec.e0 > 1 ||
        spec.p_max < 1 || spec.breakpoints_min > spec.breakpoints_max)
        throw InputError("invalid random spec (need n, m >= 1, 1 <= m1 <= m, e0 in (0,1], p-max >= 1)");

    AlgorithmParams params;
    params.limits = oracle_limits();
    params.epsilon = rational_flag(opt.epsilon, "--epsilon");
    if (*params.epsilon <= 0 || *params.epsilon >= 1)
        throw InputError("--epsilon must lie in (0,1)");
    if (opt.with_oracle && (opt.n > params.limits.max_n || opt.m > params.limits.max_m))
        throw ResourceLimit("--with-oracle: n or m exceeds the oracle limits");

    std::vector<std::string> algorithms = opt.algorithms;
    if (algorithms.empty())
        algorithms = obj == Objective::Makespan
                         ? std::vector<std::string>{"ls", "lpt", "ls-ect", "lpt-ect", "scheme-makespan"}
                         : std::vector<std::string>{"spt", "spt-ect", "scheme-totaltime"};
    for (const auto &alg : algorithms)
        if (std::find(kAlgorithms.begin(), kAlgorithms.end(), alg) == kAlgorithms.end())
            throw InputError("unknown algorithm '" + alg + "'");

    std::cout << "trial,seed,algorithm,value,oracle_value,ratio,bound,bound_satisfied\n";
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        spec.seed = opt.seed + trial;
        const Instance inst = random_instance(spec);
        std::optional<Rational> oracle;
        if (opt.with_oracle)
            oracle = exact_optimal(inst, obj, params.limits).objective_value;
        for (const auto &alg : algorithms) {
            if (alg == "scheme-totaltime" && inst.m1 + 1 < inst.machines.size())
                continue;
            const Rational value = run_algorithm(alg, inst, obj, params).schedule.value(obj);
            const std::optional<Rational> bound = guarantee_bound(alg, inst, *params.epsilon);
            std::cout << trial << ',' << spec.seed << ',' << alg << ',' << format(value, opt.decimal) << ',';
            if (oracle) {
                const Rational ratio = value / *oracle;
                std::cout << format(*oracle, opt.decimal) << ',' << format(ratio, opt.decimal) << ',';
                if (bound)
                    std::cout << format(*bound, opt.decimal) << ',' << (ratio <= *bound ? "true" : "false");
                else
                    std::cout << "n/a,n/a";
            } else {
                std::cout << "n/a,n/a," << (bound ? format(*bound, opt.decimal) : std::string("n/a")) << ",n/a";
            }
            std::cout << '\n';
        }
    }
    return 0;
}

struct GadgetOptions {
    std::string kind;
    std::string name;
    std::vector<long> a;
    long f = 2;
    std::string e0, x, alpha;
    RandomSpec random;
    std::string random_e0 = "1/2";
};

int cmd_gadget(const GadgetOptions &opt) {
    Instance inst;
    try {
        if (opt.kind == "partition-makespan")
            inst = partition_gadget_makespan(opt.a, opt.f);
        else if (opt.kind == "partition-totaltime")
            inst = partition_gadget_totaltime(opt.a, opt.f);
        else if (opt.kind == "named") {
            NamedParams params;
            if (!opt.e0.empty())
                params.e0 = rational_flag(opt.e0, "--e0");
            if (!opt.x.empty())
                params.x = rational_flag(opt.x, "--x");
            if (!opt.alpha.empty())
                params.alpha = rational_flag(opt.alpha, "--alpha");
            inst = named_example(opt.name, params);
        } else if (opt.kind == "random") {
            RandomSpec spec = opt.random;
            spec.e0 = rational_flag(opt.random_e0, "--e0");
            inst = random_instance(spec);
        } else {
            throw InputError("unknown gadget kind '" + opt.kind + "'");
        }
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    std::cout << io::dump_instance(inst);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Scheduling with shared processing on parallel machines"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto *solve_cmd = app.add_subcommand("solve", "Run one algorithm on an instance file");
    solve_cmd->add_option("instance", solve.path, "Instance JSON file")->required();
    solve_cmd->add_option("--alg", solve.algorithm, "Algorithm")->required()->check(CLI::IsMember(kAlgorithms));
    solve_cmd->add_option("--obj", solve.objective, "makespan | totaltime");
    solve_cmd->add_option("--epsilon", solve.epsilon, "Accuracy for the schemes (rational)");
    solve_cmd->add_option("--d", solve.d, "Large-job count for scheme-makespan");
    solve_cmd->add_flag("--decimal", solve.decimal, "Also print decimal approximations");

    CompareOptions compare;
    auto *compare_cmd = app.add_subcommand("compare", "Run every algorithm and compare with the oracle (CSV)");
    compare_cmd->add_option("instance", compare.path, "Instance JSON file")->required();
    compare_cmd->add_option("--obj", compare.objective, "makespan | totaltime");
    compare_cmd->add_option("--epsilon", compare.epsilon, "Accuracy for the schemes (rational)");
    compare_cmd->add_flag("--decimal", compare.decimal, "Print decimal approximations");

    ExperimentOptions experiment;
    std::string experiment_algs;
    auto *experiment_cmd = app.add_subcommand("experiment", "Seeded random trials with ratio checks (CSV)");
    experiment_cmd->add_option("--n", experiment.n, "Jobs per instance");
    experiment_cmd->add_option("--m", experiment.m, "Machines");
    experiment_cmd->add_option("--m1", experiment.m1, "Machines with ratios bounded by e0");
    experiment_cmd->add_option("--e0", experiment.e0, "Ratio lower bound (rational)");
    experiment_cmd->add_option("--trials", experiment.trials, "Number of trials");
    experiment_cmd->add_option("--seed", experiment.seed, "Seed of the first trial");
    experiment_cmd->add_option("--epsilon", experiment.epsilon, "Accuracy for the schemes (rational)");
    experiment_cmd->add_option("--obj", experiment.objective, "makespan | totaltime");
    experiment_cmd->add_option("--alg", experiment_algs, "Comma-separated algorithms");
    experiment_cmd->add_option("--p-max", experiment.p_max, "Largest processing time");
    experiment_cmd->add_option("--bp-min", experiment.bp_min, "Fewest finite interval ends per machine");
    experiment_cmd->add_option("--bp-max", experiment.bp_max, "Most finite interval ends per machine");
    experiment_cmd->add_flag("--with-oracle", experiment.with_oracle, "Compute exact optima and ratios");
    experiment_cmd->add_flag("--decimal", experiment.decimal, "Print decimal approximations");

    GadgetOptions gadget;
    std::string gadget_a;
    auto *gadget_cmd = app.add_subcommand("gadget", "Emit a hardness gadget, named example or random instance");
    gadget_cmd->add_option("kind", gadget.kind, "partition-makespan | partition-totaltime | named | random")
        ->required()
        ->check(CLI::IsMember({"partition-makespan", "partition-totaltime", "named", "random"}));
    gadget_cmd->add_option("name", gadget.name, "Example name (named)");
    gadget_cmd->add_option("--a", gadget_a, "Comma-separated positive integers (partition gadgets)");
    gadget_cmd->add_option("--f", gadget.f, "Gap factor f > 1 (partition gadgets)");
    gadget_cmd->add_option("--e0", gadget.e0, "e0 (named, random)");
    gadget_cmd->add_option("--x", gadget.x, "x (named: ls_bad, lsect_tight)");
    gadget_cmd->add_option("--alpha", gadget.alpha, "alpha (named: spt_unbounded)");
    gadget_cmd->add_option("--seed", gadget.random.seed, "Seed (random)");
    gadget_cmd->add_option("--n", gadget.random.n, "Jobs (random)");
    gadget_cmd->add_option("--m", gadget.random.m, "Machines (random)");
    gadget_cmd->add_option("--m1", gadget.random.m1, "Bounded machines (random)");
    gadget_cmd->add_option("--p-max", gadget.random.p_max, "Largest processing time (random)");
    gadget_cmd->add_option("--bp-min", gadget.random.breakpoints_min, "Fewest interval ends (random)");
    gadget_cmd->add_option("--bp-max", gadget.random.breakpoints_max, "Most interval ends (random)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return report_error("usage", e.what());
    }

    auto split = [](const std::string &text) {
        std::vector<std::string> parts;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ','))
            if (!item.empty())
                parts.push_back(item);
        return parts;
    };

    try {
        if (*solve_cmd)
            return cmd_solve(solve);
        if (*compare_cmd)
            return cmd_compare(compare);
        if (*experiment_cmd) {
            experiment.algorithms = split(experiment_algs);
            return cmd_experiment(experiment);
        }
        if (*gadget_cmd) {
            if (gadget.random.m1 > gadget.random.m)
                gadget.random.m1 = gadget.random.m;
            if (!gadget.e0.empty())
                gadget.random_e0 = gadget.e0;
            for (const auto &item : split(gadget_a)) {
                try {
                    gadget.a.push_back(std::stol(item));
                } catch (const std::exception &) {
                    throw InputError("--a: '" + item + "' is not an integer");
                }
            }
            if (gadget.kind == "named" && gadget.name.empty())
                throw InputError("gadget named: missing example name");
            return cmd_gadget(gadget);
        }
    } catch (const InputError &e) {
        return report_error(e.details.empty() ? "input" : "validation", e.what(), e.details);
    } catch (const ResourceLimit &e) {
        return report_error("limit", e.what());
    } catch (const OracleLimitError &e) {
        return report_error("limit", e.what());
    }
    return 0;
}
