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

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "sharedsched/model.hpp"
#include "sharedsched/rational.hpp"

// Instance file format:
//
//   { "machines": [ { "intervals": [ { "start": "0", "end": "1", "ratio": "3/4" }, ... ] }, ... ],
//     "jobs": [ "1", "2", "2" ], "m1": 1, "e0": "3/4" }
//
// Every number except m1 is a string holding an exact rational ("p/q" or an
// integer). "inf" is accepted as an interval end and is only valid last.
namespace sharedsched::io {

using json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_field(const json &node, const char *key, const std::string &where) {
    if (!node.contains(key))
        throw ParseError(where + ": missing \"" + key + "\"");
    const json &value = node.at(key);
    if (!value.is_string())
        throw ParseError(where + ": \"" + key + "\" must be a string");
    try {
        return parse_rational(value.get<std::string>());
    } catch (const ParseError &e) {
        throw ParseError(where + ": " + e.what());
    }
}

} // namespace detail

/// Structural parse only; run validate_instance() on the result.
inline Instance instance_from_json(const json &doc) {
    if (!doc.is_object())
        throw ParseError("instance: top level must be an object");
    for (const char *key : {"machines", "jobs", "m1", "e0"})
        if (!doc.contains(key))
            throw ParseError(std::string("instance: missing \"") + key + "\"");

    Instance inst;
    const json &machines = doc.at("machines");
    if (!machines.is_array())
        throw ParseError("instance: \"machines\" must be an array");
    for (std::size_t i = 0; i < machines.size(); ++i) {
        const std::string where = "machine " + std::to_string(i + 1);
        const json &machine = machines[i];
        if (!machine.is_object() || !machine.contains("intervals") || !machine.at("intervals").is_array())
            throw ParseError(where + ": expected object with an \"intervals\" array");
        MachineProfile profile;
        const json &intervals = machine.at("intervals");
        for (std::size_t k = 0; k < intervals.size(); ++k) {
            const std::string at = where + ", interval " + std::to_string(k + 1);
            const json &iv = intervals[k];
            if (!iv.is_object())
                throw ParseError(at + ": expected object");
            SharedInterval interval;
            interval.start = detail::rational_field(iv, "start", at);
            interval.ratio = detail::rational_field(iv, "ratio", at);
            if (!iv.contains("end") || !iv.at("end").is_string())
                throw ParseError(at + ": \"end\" must be a string");
            if (iv.at("end").get<std::string>() != "inf")
                interval.end = detail::rational_field(iv, "end", at);
            profile.intervals.push_back(std::move(interval));
        }
        inst.machines.push_back(std::move(profile));
    }

    const json &jobs = doc.at("jobs");
    if (!jobs.is_array())
        throw ParseError("instance: \"jobs\" must be an array");
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        if (!jobs[j].is_string())
            throw ParseError("job " + std::to_string(j + 1) + ": must be a string");
        try {
            inst.jobs.push_back(parse_rational(jobs[j].get<std::string>()));
        } catch (const ParseError &e) {
            throw ParseError("job " + std::to_string(j + 1) + ": " + e.what());
        }
    }

    const json &m1 = doc.at("m1");
    if (!m1.is_number_integer() || m1.get<long long>() < 0)
        throw ParseError("instance: \"m1\" must be a nonnegative integer");
    inst.m1 = m1.get<std::size_t>();
    inst.e0 = detail::rational_field(doc, "e0", "instance");
    return inst;
}

inline json instance_to_json(const Instance &inst) {
    json doc;
    json machines = json::array();
    for (const auto &machine : inst.machines) {
        json intervals = json::array();
        for (const auto &iv : machine.intervals)
            intervals.push_back(json{{"start", to_string(iv.start)},
                                     {"end", iv.end ? to_string(*iv.end) : std::string("inf")},
                                     {"ratio", to_string(iv.ratio)}});
        machines.push_back(json{{"intervals", std::move(intervals)}});
    }
    doc["machines"] = std::move(machines);
    json jobs = json::array();
    for (const auto &p : inst.jobs)
        jobs.push_back(to_string(p));
    doc["jobs"] = std::move(jobs);
    doc["m1"] = inst.m1;
    doc["e0"] = to_string(inst.e0);
    return doc;
}

inline Instance parse_instance(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    return instance_from_json(doc);
}

inline std::string dump_instance(const Instance &inst) { return instance_to_json(inst).dump(2) + "\n"; }

inline Instance load_instance(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

} // namespace sharedsched::io
