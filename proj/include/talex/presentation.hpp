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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "talex/errors.hpp"
#include "talex/word.hpp"

namespace talex {

namespace detail {

inline bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    const auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    const auto tail = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
    if (!alpha(s[0])) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!tail(s[i])) return false;
    return true;
}

struct Token {
    std::string text;
    int line;
    int column;
};

// Whitespace-separated tokens; ';' and ',' always stand alone.
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::string cur;
    int tok_line = 1, tok_col = 1;
    const auto flush = [&] {
        if (!cur.empty()) {
            out.push_back({cur, tok_line, tok_col});
            cur.clear();
        }
    };
    for (const char c : text) {
        if (c == '\n') {
            flush();
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            flush();
            ++col;
            continue;
        }
        if (c == ';' || c == ',') {
            flush();
            out.push_back({std::string(1, c), line, col});
            ++col;
            continue;
        }
        if (cur.empty()) {
            tok_line = line;
            tok_col = col;
        }
        cur += c;
        ++col;
    }
    flush();
    return out;
}

// `name` or `name^-1`; returns the name and exponent.
inline std::pair<std::string, int> parse_letter_token(const Token& t) {
    std::string_view s = t.text;
    int exp = 1;
    if (const auto caret = s.find('^'); caret != std::string_view::npos) {
        if (s.substr(caret) != "^-1")
            throw ParseError("invalid letter token '" + t.text + "' (only ^-1 is allowed)", t.line, t.column);
        exp = -1;
        s = s.substr(0, caret);
    }
    if (!valid_name(s)) throw ParseError("invalid generator name '" + std::string(s) + "'", t.line, t.column);
    return {std::string(s), exp};
}

}  // namespace detail

// A deficiency-one group presentation with a distinguished generator and
// per-generator abelianization weights (all 1 in the Wirtinger case).
class Presentation {
   public:
    static Presentation make(std::vector<std::string> generator_names, std::vector<Word> relators,
                             int deleted_index = 0, std::vector<long long> epsilon = {},
                             std::optional<std::string> name = std::nullopt) {
        Presentation p;
        p.gens_ = std::move(generator_names);
        p.relators_ = std::move(relators);
        p.deleted_ = deleted_index;
        p.epsilon_ = epsilon.empty() ? std::vector<long long>(p.gens_.size(), 1) : std::move(epsilon);
        p.name_ = std::move(name);
        p.validate();
        return p;
    }

    // Text grammar: `gens:` name-list `;` `rels:` comma-separated words.
    static Presentation parse(std::string_view text) {
        const std::vector<detail::Token> toks = detail::tokenize(text);
        std::size_t i = 0;
        const auto expect = [&](std::string_view what) {
            if (i >= toks.size()) throw ParseError("unexpected end of input, expected '" + std::string(what) + "'");
            if (toks[i].text != what)
                throw ParseError("expected '" + std::string(what) + "', found '" + toks[i].text + "'", toks[i].line,
                                 toks[i].column);
            ++i;
        };

        expect("gens:");
        std::vector<std::string> names;
        while (i < toks.size() && toks[i].text != ";") {
            const detail::Token& t = toks[i];
            if (!detail::valid_name(t.text))
                throw ParseError("invalid generator name '" + t.text + "'", t.line, t.column);
            for (const std::string& seen : names)
                if (seen == t.text) throw ParseError("duplicate generator '" + t.text + "'", t.line, t.column);
            names.push_back(t.text);
            ++i;
        }
        expect(";");
        expect("rels:");

        std::vector<Word> relators;
        std::vector<Letter> letters;
        bool saw_letter = false;
        const auto finish_relator = [&](const detail::Token* at) {
            if (!saw_letter) {
                if (at) throw ParseError("empty relator", at->line, at->column);
                throw ParseError("empty relator at end of input");
            }
            relators.push_back(Word::reduce(letters));
            letters.clear();
            saw_letter = false;
        };
        while (i < toks.size()) {
            const detail::Token& t = toks[i];
            if (t.text == ",") {
                finish_relator(&t);
                ++i;
                continue;
            }
            if (t.text == ";") throw ParseError("unexpected ';'", t.line, t.column);
            const auto [name, exp] = detail::parse_letter_token(t);
            int gen = -1;
            for (std::size_t g = 0; g < names.size(); ++g)
                if (names[g] == name) {
                    gen = static_cast<int>(g);
                    break;
                }
            if (gen < 0) throw ParseError("undeclared generator '" + name + "'", t.line, t.column);
            letters.push_back(Letter{gen, exp});
            saw_letter = true;
            ++i;
        }
        if (saw_letter || !relators.empty()) finish_relator(nullptr);

        return make(std::move(names), std::move(relators));
    }

    static Presentation builtin(std::string_view name) {
        if (name == "trefoil") {
            Presentation p = parse("gens: x0 x1 x2 ; rels: x0 x1 x0^-1 x2^-1 , x1 x2 x1^-1 x0^-1");
            p.name_ = "trefoil";
            return p;
        }
        throw ValidationError("unknown builtin presentation '" + std::string(name) + "'");
    }

    const std::vector<std::string>& generator_names() const { return gens_; }
    const std::vector<Word>& relators() const { return relators_; }
    const std::vector<long long>& epsilon() const { return epsilon_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    int relator_count() const { return static_cast<int>(relators_.size()); }
    int deleted_index() const { return deleted_; }
    const std::string& deleted_generator() const { return gens_[static_cast<std::size_t>(deleted_)]; }
    const std::optional<std::string>& name() const { return name_; }

    int index_of(std::string_view gen) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] == gen) return static_cast<int>(i);
        throw ValidationError("unknown generator '" + std::string(gen) + "'");
    }

    // True when every relator is a conjugation relator w x_a w^-1 x_b^-1 and
    // all abelianization weights are 1. The stored reduced form of such a
    // relator either ends with the x_b^-1 letter or begins with it (when the
    // conjugator starts with x_b^-1 and the tail cancels).
    bool is_wirtinger() const {
        for (const long long w : epsilon_)
            if (w != 1) return false;
        for (const Word& r : relators_) {
            const auto& ls = r.letters();
            if (ls.empty()) continue;  // degenerate: a = b with trivial conjugator
            const auto symmetric_conjugate = [](std::span<const Letter> c) {
                if (c.size() % 2 == 0) return false;
                const std::size_t s = c.size() / 2;
                if (c[s].exp != 1) return false;
                for (std::size_t i = 0; i < s; ++i)
                    if (c[c.size() - 1 - i].gen != c[i].gen || c[c.size() - 1 - i].exp != -c[i].exp) return false;
                return true;
            };
            const std::span<const Letter> all{ls};
            const bool tail_form = ls.back().exp == -1 && symmetric_conjugate(all.first(ls.size() - 1));
            const bool head_form = ls.front().exp == -1 && symmetric_conjugate(all.subspan(1));
            if (!tail_form && !head_form) return false;
        }
        return true;
    }

    // Canonical text; parse(render()) reproduces the generators and relators.
    std::string render() const {
        std::string out = "gens:";
        for (const std::string& g : gens_) out += " " + g;
        out += " ; rels:";
        for (std::size_t i = 0; i < relators_.size(); ++i) {
            out += i ? " , " : " ";
            out += render_word(relators_[i], gens_);
        }
        return out;
    }

    // FNV-1a over the canonical description, including non-default deletion
    // and weights; stable across runs.
    std::string hash_hex() const {
        std::string desc = render();
        if (deleted_ != 0) desc += " ; deleted: " + deleted_generator();
        bool default_eps = true;
        for (const long long w : epsilon_)
            if (w != 1) default_eps = false;
        if (!default_eps) {
            desc += " ; epsilon:";
            for (const long long w : epsilon_) desc += " " + std::to_string(w);
        }
        std::uint64_t h = 14695981039346656037ull;
        for (const char c : desc) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        static constexpr char digits[] = "0123456789abcdef";
        std::string hex(16, '0');
        for (int i = 15; i >= 0; --i) {
            hex[static_cast<std::size_t>(i)] = digits[h & 0xf];
            h >>= 4;
        }
        return hex;
    }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.gens_ == b.gens_ && a.relators_ == b.relators_ && a.epsilon_ == b.epsilon_;
    }

   private:
    Presentation() = default;

    void validate() const {
        if (gens_.empty()) throw ValidationError("a presentation needs at least one generator");
        for (const std::string& g : gens_)
            if (!detail::valid_name(g)) throw ValidationError("invalid generator name '" + g + "'");
        for (std::size_t i = 0; i < gens_.size(); ++i)
            for (std::size_t j = i + 1; j < gens_.size(); ++j)
                if (gens_[i] == gens_[j]) throw ValidationError("duplicate generator '" + gens_[i] + "'");
        if (relators_.size() + 1 != gens_.size())
            throw ValidationError("deficiency-one presentation required: " + std::to_string(gens_.size()) +
                                  " generators need " + std::to_string(gens_.size() - 1) + " relators, found " +
                                  std::to_string(relators_.size()));
        if (epsilon_.size() != gens_.size())
            throw ValidationError("epsilon weights must cover every generator");
        if (deleted_ < 0 || deleted_ >= static_cast<int>(gens_.size()))
            throw ValidationError("deleted generator index out of range");
        for (std::size_t i = 0; i < relators_.size(); ++i) {
            if (relators_[i].max_generator() >= static_cast<int>(gens_.size()))
                throw ValidationError("relator " + std::to_string(i + 1) + " references an undeclared generator");
            const long long s = exponent_sum(relators_[i], epsilon_);
            if (s != 0)
                throw ValidationError("relator " + std::to_string(i + 1) + " has weighted exponent sum " +
                                      std::to_string(s) + ", expected 0");
        }
    }

    std::vector<std::string> gens_;
    std::vector<Word> relators_;
    std::vector<long long> epsilon_;
    int deleted_ = 0;
    std::optional<std::string> name_;
};

}  // namespace talex
