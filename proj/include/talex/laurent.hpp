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

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "talex/errors.hpp"
#include "talex/numbers.hpp"

namespace talex {

// Laurent polynomial in one variable t over an exact coefficient ring C
// (talex::Int or talex::Rat). Sparse map from degree to nonzero coefficient;
// the zero polynomial is the empty map.
template <class C>
class Laurent {
   public:
    Laurent() = default;
    Laurent(const C& constant) {  // NOLINT: implicit scalar lift is intended
        if (constant != 0) coeffs_.emplace(0, constant);
    }
    Laurent(int constant) : Laurent(C(constant)) {}

    static Laurent t(int degree = 1) { return monomial(degree, C(1)); }

    static Laurent monomial(int degree, const C& coeff) {
        Laurent p;
        if (coeff != 0) p.coeffs_.emplace(degree, coeff);
        return p;
    }

    // Ascending coefficient list starting at degree `lowest` (the exchange
    // format used by files and the CLI).
    static Laurent from_coeffs(std::span<const C> ascending, int lowest = 0) {
        Laurent p;
        for (std::size_t i = 0; i < ascending.size(); ++i)
            if (ascending[i] != 0) p.coeffs_.emplace(lowest + static_cast<int>(i), ascending[i]);
        return p;
    }

    const std::map<int, C>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Degree bounds; only meaningful when nonzero.
    int lowest_degree() const { return coeffs_.begin()->first; }
    int degree() const { return coeffs_.rbegin()->first; }

    C coeff(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? C(0) : it->second;
    }

    C leading_coeff() const { return is_zero() ? C(0) : coeffs_.rbegin()->second; }

    Laurent& add_term(int degree, const C& c) {
        if (c == 0) return *this;
        auto [it, inserted] = coeffs_.emplace(degree, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
        return *this;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [d, c] : b.coeffs_) r.add_term(d, c);
        return r;
    }

    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (const auto& [d, c] : a.coeffs_) r.coeffs_.emplace(d, -c);
        return r;
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [d, c] : b.coeffs_) r.add_term(d, -c);
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) r.add_term(da + db, ca * cb);
        return r;
    }

    friend Laurent operator*(const C& s, const Laurent& a) {
        Laurent r;
        if (s == 0) return r;
        for (const auto& [d, c] : a.coeffs_) r.coeffs_.emplace(d, s * c);
        return r;
    }

    Laurent pow(unsigned e) const {
        Laurent r{C(1)};
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // Multiplication by the unit t^k.
    Laurent shifted(int k) const {
        Laurent r;
        for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d + k, c);
        return r;
    }

    // The involution t -> t^-1.
    Laurent bar() const {
        Laurent r;
        for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(-d, c);
        return r;
    }

    // Evaluation at a nonzero rational point (negative degrees allowed).
    Rat evaluate(const Rat& x) const {
        Rat acc = 0;
        for (const auto& [d, c] : coeffs_) {
            Rat p = 1;
            const Rat base = d >= 0 ? x : Rat(1) / x;
            for (int i = 0; i < (d >= 0 ? d : -d); ++i) p *= base;
            acc += Rat(c) * p;
        }
        return acc;
    }

    friend bool operator==(const Laurent&, const Laurent&) = default;

    // Sparse descending rendering, e.g. "t^2 - 3*t + 1", "t^-1 - 1", "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [d, c] = *it;
            const bool neg = c < 0;
            const C mag = neg ? C(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const bool unit_coeff = (mag == 1) && d != 0;
            if (!unit_coeff) {
                out += talex::to_string(mag);
                if (d != 0) out += "*";
            }
            if (d != 0) {
                out += "t";
                if (d != 1) out += "^" + std::to_string(d);
            }
        }
        return out;
    }

   private:
    std::map<int, C> coeffs_;
};

using IntLaurent = Laurent<Int>;
using RatLaurent = Laurent<Rat>;

inline RatLaurent to_rational(const IntLaurent& p) {
    RatLaurent r;
    for (const auto& [d, c] : p.coeffs()) r.add_term(d, Rat(c));
    return r;
}

inline bool is_integral(const RatLaurent& p) {
    for (const auto& [d, c] : p.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

// Exact conversion; rejects non-integer coefficients.
inline IntLaurent to_integral(const RatLaurent& p) {
    IntLaurent r;
    for (const auto& [d, c] : p.coeffs()) {
        if (!is_integer(c)) throw PreconditionError("polynomial has non-integer coefficient " + to_string(c));
        r.add_term(d, numerator(c));
    }
    return r;
}

// gcd of the coefficients, positive; 0 for the zero polynomial.
inline Int content(const IntLaurent& p) {
    Int g = 0;
    for (const auto& [d, c] : p.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

inline IntLaurent primitive_part(const IntLaurent& p) {
    const Int g = content(p);
    if (g == 0 || g == 1) return p;
    IntLaurent r;
    for (const auto& [d, c] : p.coeffs()) r.add_term(d, c / g);
    return r;
}

// Canonical representative of the class of p under multiplication by units
// +-t^i of Z[t^(+-1)]: nonzero constant term, positive leading coefficient.
// Zero maps to zero; idempotent. Integer content is preserved.
inline IntLaurent unit_normalize(const IntLaurent& p) {
    if (p.is_zero()) return p;
    IntLaurent r = p.shifted(-p.lowest_degree());
    if (r.leading_coeff() < 0) r = -r;
    return r;
}

// Equality up to multiplication by units of Z[t^(+-1)].
inline bool doteq(const IntLaurent& a, const IntLaurent& b) { return unit_normalize(a) == unit_normalize(b); }

// p(t^-1) equal to p(t) up to units.
inline bool is_reciprocal(const IntLaurent& p) { return doteq(p.bar(), p); }

// Scales a rational-coefficient Laurent polynomial into its canonical
// primitive integral representative (unique positive rational multiple with
// coprime integer coefficients), then unit-normalizes. Used when printing and
// comparing determinants of representations that are not integral.
inline IntLaurent canonical_integral(const RatLaurent& p) {
    if (p.is_zero()) return {};
    Int den_lcm = 1;
    for (const auto& [d, c] : p.coeffs())
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    IntLaurent scaled;
    for (const auto& [d, c] : p.coeffs()) scaled.add_term(d, numerator(c) * (den_lcm / denominator(c)));
    return unit_normalize(primitive_part(scaled));
}

// --- polynomial division over the rationals -------------------------------

// Exact quotient a / b when b divides a in Q[t] up to a unit t^k; throws
// otherwise. Laurent inputs are shifted to ordinary polynomials first.
inline RatLaurent divexact(const RatLaurent& a, const RatLaurent& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (a.is_zero()) return {};
    const int shift = a.lowest_degree() - b.lowest_degree();
    RatLaurent rem = a.shifted(-a.lowest_degree());
    const RatLaurent div = b.shifted(-b.lowest_degree());
    RatLaurent quot;
    while (!rem.is_zero() && rem.degree() >= div.degree()) {
        const int d = rem.degree() - div.degree();
        const Rat c = rem.leading_coeff() / div.leading_coeff();
        quot.add_term(d, c);
        rem = rem - RatLaurent::monomial(d, c) * div;
    }
    if (!rem.is_zero()) throw PreconditionError("inexact polynomial division");
    return quot.shifted(shift);
}

inline bool divides(const RatLaurent& b, const RatLaurent& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    RatLaurent rem = a.shifted(-a.lowest_degree());
    const RatLaurent div = b.shifted(-b.lowest_degree());
    while (!rem.is_zero() && rem.degree() >= div.degree()) {
        const Rat c = rem.leading_coeff() / div.leading_coeff();
        rem = rem - RatLaurent::monomial(rem.degree() - div.degree(), c) * div;
    }
    return rem.is_zero();
}

// Monic gcd in Q[t] of the power-cleared inputs (Euclid). gcd(0, 0) = 0.
inline RatLaurent gcd(const RatLaurent& a, const RatLaurent& b) {
    RatLaurent x = a.is_zero() ? a : a.shifted(-a.lowest_degree());
    RatLaurent y = b.is_zero() ? b : b.shifted(-b.lowest_degree());
    while (!y.is_zero()) {
        // remainder of x by y
        RatLaurent rem = x;
        while (!rem.is_zero() && rem.degree() >= y.degree()) {
            const Rat c = rem.leading_coeff() / y.leading_coeff();
            rem = rem - RatLaurent::monomial(rem.degree() - y.degree(), c) * y;
        }
        x = y;
        y = rem.is_zero() ? rem : rem.shifted(-rem.lowest_degree());
    }
    if (x.is_zero()) return x;
    return (Rat(1) / x.leading_coeff()) * x;
}

}  // namespace talex
