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
#include <utility>

#include "talex/numbers.hpp"
#include "talex/word.hpp"

namespace talex {

// Element of the integral group ring of a free group: a finite formal sum of
// reduced words with nonzero integer coefficients.
class GroupRingElement {
   public:
    GroupRingElement() = default;

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return from_word(Word{}); }

    static GroupRingElement from_word(const Word& w, Int coeff = 1) {
        GroupRingElement e;
        if (coeff != 0) e.terms_.emplace(w, std::move(coeff));
        return e;
    }

    const std::map<Word, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement& add_term(const Word& w, const Int& coeff) {
        if (coeff == 0) return *this;
        auto [it, inserted] = terms_.emplace(w, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }

    friend GroupRingElement operator-(const GroupRingElement& a) {
        GroupRingElement r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
        return r;
    }

    friend GroupRingElement operator*(const Int& c, const GroupRingElement& a) {
        GroupRingElement r;
        if (c == 0) return r;
        for (const auto& [w, cw] : a.terms_) r.terms_.emplace(w, c * cw);
        return r;
    }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

   private:
    std::map<Word, Int> terms_;  // no zero coefficients stored
};

// Fox partial derivative of a reduced word with respect to generator j.
// Characterized by d(x_i)/dx_j = delta_ij and d(uv)/dx_j = du/dx_j + u dv/dx_j,
// which force d(x_j^-1)/dx_j = -x_j^-1. Each letter contributes one term with
// the prefix before it.
inline GroupRingElement fox_derivative(const Word& w, int j) {
    GroupRingElement out;
    Word prefix;
    for (const Letter& l : w.letters()) {
        if (l.gen == j) {
            if (l.exp > 0)
                out.add_term(prefix, 1);
            else
                out.add_term(prefix * Word::generator(l.gen, -1), -1);
        }
        prefix = prefix * Word::generator(l.gen, l.exp);
    }
    return out;
}

// Z-linear extension to the group ring.
inline GroupRingElement fox_derivative(const GroupRingElement& e, int j) {
    GroupRingElement out;
    for (const auto& [w, c] : e.terms()) out = out + c * fox_derivative(w, j);
    return out;
}

}  // namespace talex
