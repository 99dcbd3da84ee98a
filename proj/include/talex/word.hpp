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

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace talex {

// One letter of a free-group word: generator index (0-based) and exponent ±1.
struct Letter {
    int gen = 0;
    int exp = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A reduced word in a free group. The empty word is the identity; no adjacent
// pair x x^-1 or x^-1 x is ever stored.
class Word {
   public:
    Word() = default;

    // Free reduction of an arbitrary letter sequence; idempotent.
    static Word reduce(std::span<const Letter> raw) {
        Word w;
        w.letters_.reserve(raw.size());
        for (const Letter& l : raw) w.push_reduced(l);
        return w;
    }

    static Word generator(int gen, int exp = 1) {
        Word w;
        w.letters_.push_back(Letter{gen, exp});
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    Word inverse() const {
        Word w;
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(Letter{it->gen, -it->exp});
        return w;
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word w = a;
        for (const Letter& l : b.letters_) w.push_reduced(l);
        return w;
    }

    // Largest generator index used, or -1 for the identity.
    int max_generator() const {
        int m = -1;
        for (const Letter& l : letters_)
            if (l.gen > m) m = l.gen;
        return m;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

   private:
    void push_reduced(const Letter& l) {
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    std::vector<Letter> letters_;
};

// Weighted exponent sum: sum of weight(gen) * exp over the letters. With all
// weights 1 this is the abelianization exponent of the word.
inline long long exponent_sum(const Word& w, std::span<const long long> weights) {
    long long s = 0;
    for (const Letter& l : w.letters()) s += weights[static_cast<std::size_t>(l.gen)] * l.exp;
    return s;
}

inline long long exponent_sum(const Word& w) {
    long long s = 0;
    for (const Letter& l : w.letters()) s += l.exp;
    return s;
}

// Text form shared with the presentation grammar: space-separated tokens
// `name` or `name^-1`.
inline std::string render_word(const Word& w, std::span<const std::string> names) {
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += names[static_cast<std::size_t>(l.gen)];
        if (l.exp < 0) out += "^-1";
    }
    return out;
}

}  // namespace talex
