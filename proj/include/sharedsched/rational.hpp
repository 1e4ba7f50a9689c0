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

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace sharedsched {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

/// Parses "p/q" or "p" (optional leading '-') into a canonical rational.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return Rational(n, d);
}

inline std::string to_string(const Rational &r) {
    const Integer &den = boost::multiprecision::denominator(r);
    if (den == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

inline double to_double(const Rational &r) { return r.convert_to<double>(); }

/// Smallest integer >= r.
inline Integer ceil(const Rational &r) {
    const Integer n = boost::multiprecision::numerator(r);
    const Integer d = boost::multiprecision::denominator(r);
    Integer q = n / d;  // truncates toward zero
    if (q * d != n && n > 0)
        ++q;
    return q;
}

/// Largest integer <= r.
inline Integer floor(const Rational &r) {
    const Integer n = boost::multiprecision::numerator(r);
    const Integer d = boost::multiprecision::denominator(r);
    Integer q = n / d;
    if (q * d != n && n < 0)
        --q;
    return q;
}

} // namespace sharedsched
