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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sharedsched/capacity.hpp"
#include "sharedsched/model.hpp"
#include "sharedsched/schedulers.hpp"

namespace sharedsched {

// ---------------------------------------------------------------------------
// Makespan: enumerate the d largest jobs, list-schedule the rest by ECT.
// ---------------------------------------------------------------------------

/// Number of large jobs needed for a (1+epsilon) makespan guarantee, capped at n.
/// Uses m/(eps*e0) when every machine is bounded (m1 == m) and
/// m(m+m1-1)/(eps*e0*m1) otherwise.
inline std::size_t compute_d(std::size_t m, std::size_t m1, const Rational &e0, const Rational &epsilon,
                             std::size_t n) {
    if (m1 < 1 || m1 > m)
        throw std::invalid_argument("compute_d: need 1 <= m1 <= m");
    if (e0 <= 0 || e0 > 1)
        throw std::invalid_argument("compute_d: e0 out of (0,1]");
    if (epsilon <= 0 || epsilon >= 1)
        throw std::invalid_argument("compute_d: epsilon out of (0,1)");
    const Rational mm(static_cast<long>(m));
    const Rational mm1(static_cast<long>(m1));
    const Rational raw = m1 == m ? mm / (epsilon * e0) : mm * (mm + mm1 - 1) / (epsilon * e0 * mm1);
    const Integer d = sharedsched::ceil(raw);
    if (d >= Integer(static_cast<long>(n)))
        return n;
    return d.convert_to<std::size_t>();
}

/// Tries every assignment of the d largest jobs (ties by index) and finishes
/// each with earliest-completion list scheduling of the remaining jobs in
/// nonincreasing length order. Returns the smallest makespan found; among equal
/// makespans the lexicographically smallest large-job assignment wins.
inline Schedule makespan_scheme(const Instance &inst, std::span<const CapacityTable> tables, std::size_t d) {
    const std::size_t n = inst.jobs.size();
    const std::size_t m = inst.machines.size();
    if (d > n)
        throw std::invalid_argument("makespan_scheme: d exceeds job count");

    const std::vector<std::size_t> order = job_order(inst.jobs, OrderRule::Lpt);
    const std::span<const std::size_t> large(order.data(), d);
    const std::span<const std::size_t> small(order.data() + d, n - d);

    std::vector<Rational> load(m, Rational(0));
    std::vector<std::size_t> choice(d, 0);
    std::optional<Rational> best_makespan;
    Assignment best;

    auto finish_leaf = [&] {
        ListState state(tables);
        for (std::size_t k = 0; k < d; ++k)
            state.assign(large[k], inst.jobs[large[k]], choice[k]);
        for (std::size_t j : small)
            state.place(j, inst.jobs[j], PlacementRule::EarliestCompletion);
        const Rational makespan = state.makespan();
        if (!best_makespan || makespan < *best_makespan) {
            best_makespan = makespan;
            best = state.release();
        }
    };

    // Depth-first over the m^d large-job assignments, machine index ascending.
    auto descend = [&](auto &&self, std::size_t depth) -> void {
        if (depth == d) {
            finish_leaf();
            return;
        }
        for (std::size_t i = 0; i < m; ++i) {
            choice[depth] = i;
            load[i] += inst.jobs[large[depth]];
            self(self, depth + 1);
            load[i] -= inst.jobs[large[depth]];
        }
    };
    descend(descend, 0);
    return evaluate(inst, tables, std::move(best));
}

inline Schedule makespan_scheme(const Instance &inst, std::size_t d) {
    const auto tables = build_tables(inst);
    return makespan_scheme(inst, tables, d);
}

/// makespan_scheme with d derived from epsilon and the instance's (m, m1, e0).
inline Schedule makespan_scheme_for_epsilon(const Instance &inst, const Rational &epsilon) {
    return makespan_scheme(inst, compute_d(inst.machines.size(), inst.m1, inst.e0, epsilon, inst.jobs.size()));
}

// ---------------------------------------------------------------------------
// Total completion time: SPT-ordered state search with delta-similarity pruning.
// ---------------------------------------------------------------------------

/// Geometric bucketing of positive rationals: bucket(v) = x with
/// (1+delta)^x <= v < (1+delta)^(x+1). Zero gets its own bucket.
///
/// The exponent is estimated in floating point; whenever the estimate lies
/// within kMargin of an integer the result is settled by exact integer
/// comparisons against (1+delta)^x.
class BucketScale {
  public:
    static constexpr std::int64_t kZeroBucket = std::numeric_limits<std::int64_t>::min();

    explicit BucketScale(const Rational &delta)
        : delta_(delta), base_num_(boost::multiprecision::numerator(Rational(1) + delta)),
          base_den_(boost::multiprecision::denominator(Rational(1) + delta)),
          log_base_(std::log1p(to_double(delta))) {
        if (delta <= 0)
            throw std::invalid_argument("BucketScale: delta must be positive");
    }

    const Rational &delta() const { return delta_; }

    std::int64_t operator()(const Rational &v) const {
        if (v == 0)
            return kZeroBucket;
        if (v < 0)
            throw std::invalid_argument("BucketScale: negative value");
        const double estimate = std::log(to_double(v)) / log_base_;
        if (std::isfinite(estimate) && std::abs(estimate) < kMaxFastExponent) {
            const double lower = std::floor(estimate);
            if (estimate - lower > kMargin && lower + 1 - estimate > kMargin)
                return static_cast<std::int64_t>(lower);
        }
        return exact(v, std::isfinite(estimate) ? static_cast<std::int64_t>(std::floor(estimate)) : 0);
    }

  private:
    static constexpr double kMargin = 1e-6;
    static constexpr double kMaxFastExponent = 1e8;

    // v >= (1+delta)^x, compared as integers.
    bool at_least_power(const Rational &v, std::int64_t x) const {
        const Integer &p = boost::multiprecision::numerator(v);
        const Integer &q = boost::multiprecision::denominator(v);
        const auto e = static_cast<unsigned>(x < 0 ? -x : x);
        const Integer a = boost::multiprecision::pow(base_num_, e);
        const Integer b = boost::multiprecision::pow(base_den_, e);
        // x >= 0: v >= a/b;  x < 0: v >= b/a
        return x >= 0 ? p * b >= q * a : p * a >= q * b;
    }

    std::int64_t exact(const Rational &v, std::int64_t guess) const {
        std::int64_t x = guess;
        while (!at_least_power(v, x))
            --x;
        while (at_least_power(v, x + 1))
            ++x;
        return x;
    }

    Rational delta_;
    Integer base_num_;
    Integer base_den_;
    double log_base_;
};

/// A partial schedule of the first jobs in SPT order: per machine the assigned
/// work P_i and the sum of completion times sigma_i, plus the link to the state
/// it was extended from.
struct PartialState {
    std::vector<Rational> loads;
    std::vector<Rational> costs;
    std::ptrdiff_t parent = -1;  // index in the previous frontier
    std::size_t machine = 0;     // machine that received the latest job

    Rational total_cost() const {
        Rational total(0);
        for (const auto &c : costs)
            total += c;
        return total;
    }
};

inline bool similar(const PartialState &a, const PartialState &b, const BucketScale &bucket) {
    if (a.loads.size() != b.loads.size())
        throw std::invalid_argument("similar: machine count mismatch");
    for (std::size_t i = 0; i < a.loads.size(); ++i)
        if (bucket(a.loads[i]) != bucket(b.loads[i]) || bucket(a.costs[i]) != bucket(b.costs[i]))
            return false;
    return true;
}

inline bool similar(const PartialState &a, const PartialState &b, const Rational &delta) {
    return similar(a, b, BucketScale(delta));
}

class SchemePreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Smallest ratio over the first m-1 machines; falls back to the declared e0 when m == 1.
inline Rational inferred_e0(const Instance &inst) {
    if (inst.machines.size() < 2)
        return inst.e0;
    Rational best(1);
    for (std::size_t i = 0; i + 1 < inst.machines.size(); ++i)
        for (const auto &iv : inst.machines[i].intervals)
            best = std::min(best, iv.ratio);
    return best;
}

/// Layer-by-layer search. Each step appends the next SPT job to every machine
/// of every kept state, then keeps one state per similarity class: the one
/// with the smallest load on the last machine, ties to the earlier-created.
/// With delta == 0 nothing is pruned and the search is exhaustive.
class TotalTimeSearch {
  public:
    TotalTimeSearch(const Instance &inst, Rational delta)
        : inst_(inst), tables_(build_tables(inst)), order_(job_order(inst.jobs, OrderRule::Spt)) {
        if (delta < 0)
            throw std::invalid_argument("TotalTimeSearch: negative delta");
        if (delta > 0)
            bucket_.emplace(delta);
        const std::size_t m = inst.machines.size();
        frontier_.push_back(PartialState{std::vector<Rational>(m, Rational(0)), std::vector<Rational>(m, Rational(0))});
        if (bucket_)
            keys_.push_back(std::vector<std::int64_t>(2 * m, BucketScale::kZeroBucket));
    }

    bool done() const { return links_.size() == order_.size(); }
    std::size_t jobs_placed() const { return links_.size(); }
    const std::vector<PartialState> &frontier() const { return frontier_; }
    std::size_t states_generated() const { return generated_; }
    std::size_t peak_frontier() const { return peak_; }
    const BucketScale *bucket() const { return bucket_ ? &*bucket_ : nullptr; }

    void step() {
        if (done())
            throw std::logic_error("TotalTimeSearch: all jobs placed");
        const std::size_t m = inst_.machines.size();
        const std::size_t job = order_[links_.size()];
        const Rational &length = inst_.jobs[job];

        std::vector<PartialState> next;
        std::vector<std::vector<std::int64_t>> next_keys;
        next.reserve(frontier_.size() * m);
        for (std::size_t s = 0; s < frontier_.size(); ++s) {
            for (std::size_t i = 0; i < m; ++i) {
                PartialState child = frontier_[s];
                child.loads[i] += length;
                child.costs[i] += tables_[i].finish_time(child.loads[i]);
                child.parent = static_cast<std::ptrdiff_t>(s);
                child.machine = i;
                if (bucket_) {
                    // only machine i changed, so only its two buckets need recomputing
                    std::vector<std::int64_t> key = keys_[s];
                    key[2 * i] = (*bucket_)(child.loads[i]);
                    key[2 * i + 1] = (*bucket_)(child.costs[i]);
                    next_keys.push_back(std::move(key));
                }
                next.push_back(std::move(child));
            }
        }
        generated_ += next.size();

        if (bucket_)
            prune(next, next_keys);

        std::vector<Link> layer;
        layer.reserve(next.size());
        for (const auto &state : next)
            layer.push_back(Link{static_cast<std::size_t>(state.parent), state.machine});
        links_.push_back(std::move(layer));
        frontier_ = std::move(next);
        keys_ = std::move(next_keys);
        peak_ = std::max(peak_, frontier_.size());
    }

    void run() {
        while (!done())
            step();
    }

    /// Reconstructs and evaluates the kept state with the smallest total cost.
    Schedule best() const {
        if (!done())
            throw std::logic_error("TotalTimeSearch: search incomplete");
        std::size_t winner = 0;
        Rational best_cost = frontier_[0].total_cost();
        for (std::size_t s = 1; s < frontier_.size(); ++s) {
            Rational cost = frontier_[s].total_cost();
            if (cost < best_cost) {
                best_cost = std::move(cost);
                winner = s;
            }
        }

        const std::size_t m = inst_.machines.size();
        std::vector<std::size_t> machine_of(order_.size());
        std::size_t cursor = winner;
        for (std::size_t level = links_.size(); level-- > 0;) {
            machine_of[level] = links_[level][cursor].machine;
            cursor = links_[level][cursor].parent;
        }
        Assignment assignment(m);
        for (std::size_t level = 0; level < order_.size(); ++level)
            assignment[machine_of[level]].push_back(order_[level]);

        Schedule schedule = evaluate(inst_, tables_, std::move(assignment));
        const PartialState &kept = frontier_[winner];
        for (std::size_t i = 0; i < m; ++i) {
            Rational load(0), cost(0);
            for (std::size_t j : schedule.assignment[i]) {
                load += inst_.jobs[j];
                cost += schedule.completions[j];
            }
            if (load != kept.loads[i] || cost != kept.costs[i])
                throw std::logic_error("TotalTimeSearch: reconstruction does not reproduce the kept state");
        }
        return schedule;
    }

  private:
    struct Link {
        std::size_t parent;
        std::size_t machine;
    };

    void prune(std::vector<PartialState> &states, std::vector<std::vector<std::int64_t>> &keys) const {
        const std::size_t last = inst_.machines.size() - 1;
        std::map<std::vector<std::int64_t>, std::size_t> survivor;
        for (std::size_t s = 0; s < states.size(); ++s) {
            auto [it, inserted] = survivor.try_emplace(keys[s], s);
            if (!inserted && states[s].loads[last] < states[it->second].loads[last])
                it->second = s;
        }
        std::vector<std::size_t> keep;
        keep.reserve(survivor.size());
        for (const auto &entry : survivor)
            keep.push_back(entry.second);
        std::sort(keep.begin(), keep.end());

        std::vector<PartialState> kept_states;
        std::vector<std::vector<std::int64_t>> kept_keys;
        kept_states.reserve(keep.size());
        kept_keys.reserve(keep.size());
        for (std::size_t s : keep) {
            kept_states.push_back(std::move(states[s]));
            kept_keys.push_back(std::move(keys[s]));
        }
        states = std::move(kept_states);
        keys = std::move(kept_keys);
    }

    const Instance &inst_;
    std::vector<CapacityTable> tables_;
    std::vector<std::size_t> order_;
    std::optional<BucketScale> bucket_;
    std::vector<PartialState> frontier_;
    std::vector<std::vector<std::int64_t>> keys_;
    std::vector<std::vector<Link>> links_;
    std::size_t generated_ = 0;
    std::size_t peak_ = 1;
};

struct TotalTimeOptions {
    Rational epsilon{1, 2};
    bool infer_e0 = false;  // use the smallest ratio on machines 1..m-1 instead of the declared e0
};

inline Rational totaltime_delta(const Rational &epsilon, const Rational &e0, std::size_t n) {
    return epsilon * e0 / Rational(6 * static_cast<long>(n));
}

/// (1+epsilon)-approximation of the minimum total completion time; requires
/// the sharing ratios of machines 1..m-1 to be bounded below (m1 >= m-1).
inline Schedule totaltime_scheme(const Instance &inst, const TotalTimeOptions &options) {
    const std::size_t m = inst.machines.size();
    if (inst.m1 + 1 < m)
        throw SchemePreconditionError("totaltime_scheme: requires m1 >= m-1");
    if (options.epsilon <= 0 || options.epsilon >= 1)
        throw SchemePreconditionError("totaltime_scheme: epsilon out of (0,1)");
    const Rational e0 = options.infer_e0 ? inferred_e0(inst) : inst.e0;
    TotalTimeSearch search(inst, totaltime_delta(options.epsilon, e0, inst.jobs.size()));
    search.run();
    return search.best();
}

inline Schedule totaltime_scheme(const Instance &inst, const Rational &epsilon) {
    return totaltime_scheme(inst, TotalTimeOptions{epsilon, false});
}

} // namespace sharedsched
