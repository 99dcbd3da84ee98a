/*
   Copyright 2026 The talex authors

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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "talex/errors.hpp"

namespace talex {

// Exact scalar types used everywhere. Coefficients of group-ring elements and
// Laurent polynomials are Int; matrix entries are Rat.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string to_string(const Int& v) { return v.str(); }

// "p" for integers, "p/q" otherwise (q > 0 by cpp_rational's normalization).
inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p" or "p/q" with optional leading sign. Used by the representation
// file format.
inline Rat rat_from_string(std::string_view s) {
    const auto bad = [&] { return ValidationError("invalid rational literal: '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    const auto check_int = [&](std::string_view part) {
        if (part.empty()) throw bad();
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
    };
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rat(Int(std::string(s)));
    }
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    const Int d{std::string(den)};
    if (d == 0) throw ValidationError("zero denominator in rational literal: '" + std::string(s) + "'");
    return Rat(Int(std::string(num)), d);
}

}  // namespace talex
