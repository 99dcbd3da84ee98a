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

#include <string>

#include "talex/laurent.hpp"

namespace talex {

// Quotient of integer Laurent polynomials, stored as the canonical
// representative of its class up to units: numerator and denominator are
// coprime in Q[t] after clearing t powers, and each is kept primitive and
// unit-normalized. The zero function is 0/1.
class RationalFunction {
   public:
    RationalFunction() : num_(), den_(1) {}

    static RationalFunction make(const IntLaurent& num, const IntLaurent& den) {
        return make(to_rational(num), to_rational(den));
    }

    static RationalFunction make(const RatLaurent& num, const RatLaurent& den) {
        if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
        RationalFunction r;
        if (num.is_zero()) return r;
        const RatLaurent g = gcd(num, den);
        r.num_ = canonical_integral(divexact(num, g));
        r.den_ = canonical_integral(divexact(den, g));
        return r;
    }

    const IntLaurent& num() const { return num_; }
    const IntLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return make(a.num_ * b.num_, a.den_ * b.den_);
    }

    // Canonical forms make equality-up-to-units plain equality.
    friend bool doteq(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    // For a reduced fraction, bar(W) doteq W exactly when numerator and
    // denominator are each reciprocal.
    bool is_reciprocal() const { return talex::is_reciprocal(num_) && talex::is_reciprocal(den_); }

    std::string to_string() const {
        if (den_ == IntLaurent(1)) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

   private:
    IntLaurent num_;
    IntLaurent den_;
};

}  // namespace talex
