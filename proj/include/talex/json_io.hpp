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

// JSON bindings for the file formats and reports. Kept separate so the core
// headers do not depend on the vendored json library.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "talex/invariants.hpp"

namespace talex {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// --- polynomials -----------------------------------------------------------

// Exchange form: ascending coefficient array plus the lowest degree. Output
// uses plain numbers when they fit, decimal strings otherwise.
inline ordered_json poly_to_json(const IntLaurent& p) {
    ordered_json j;
    j["text"] = p.to_string();
    ordered_json coeffs = ordered_json::array();
    if (!p.is_zero()) {
        for (int d = p.lowest_degree(); d <= p.degree(); ++d) {
            const Int c = p.coeff(d);
            static const Int kMax = (Int(1) << 53);
            if (c < kMax && c > -kMax)
                coeffs.push_back(static_cast<std::int64_t>(c));
            else
                coeffs.push_back(c.str());
        }
    }
    j["coeffs"] = std::move(coeffs);
    j["lowest"] = p.is_zero() ? 0 : p.lowest_degree();
    return j;
}

inline Int int_from_json(const json& v) {
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw ValidationError("expected an integer or a decimal string, found " + v.dump());
}

inline IntLaurent poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ValidationError("polynomial document needs a 'coeffs' array");
    std::vector<Int> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const auto& v : j["coeffs"]) coeffs.push_back(int_from_json(v));
    const int lowest = j.contains("lowest") ? j["lowest"].get<int>() : 0;
    return IntLaurent::from_coeffs(coeffs, lowest);
}

// --- presentations ---------------------------------------------------------

// Document form: {"generators": [...], "relators": [[["x0",1],...], ...]} with
// optional "name", "deleted_generator" and "epsilon" (array or name->weight
// object). A single relator may also be given flat as a list of pairs.
inline Presentation presentation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw ValidationError("presentation document needs a 'generators' array");
    std::vector<std::string> gens;
    for (const auto& g : j["generators"]) {
        if (!g.is_string()) throw ValidationError("generator names must be strings");
        gens.push_back(g.get<std::string>());
    }
    const auto gen_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == name) return static_cast<int>(i);
        throw ValidationError("undeclared generator '" + name + "' in presentation document");
    };

    const auto letter_from = [&](const json& pair) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_number_integer())
            throw ValidationError("relator letters must be [name, exponent] pairs");
        const int exp = pair[1].get<int>();
        if (exp != 1 && exp != -1) throw ValidationError("letter exponents must be +1 or -1");
        return Letter{gen_index(pair[0].get<std::string>()), exp};
    };

    std::vector<Word> relators;
    if (j.contains("relators")) {
        const json& rels = j["relators"];
        if (!rels.is_array()) throw ValidationError("'relators' must be an array");
        const bool flat_single = !rels.empty() && rels[0].is_array() && !rels[0].empty() && rels[0][0].is_string();
        if (flat_single) {
            std::vector<Letter> letters;
            for (const auto& pair : rels) letters.push_back(letter_from(pair));
            relators.push_back(Word::reduce(letters));
        } else {
            for (const auto& rel : rels) {
                if (!rel.is_array()) throw ValidationError("each relator must be an array of letter pairs");
                std::vector<Letter> letters;
                for (const auto& pair : rel) letters.push_back(letter_from(pair));
                relators.push_back(Word::reduce(letters));
            }
        }
    }

    int deleted = 0;
    if (j.contains("deleted_generator")) deleted = gen_index(j["deleted_generator"].get<std::string>());

    std::vector<long long> epsilon;
    if (j.contains("epsilon")) {
        const json& eps = j["epsilon"];
        if (eps.is_array()) {
            for (const auto& w : eps) epsilon.push_back(w.get<long long>());
        } else if (eps.is_object()) {
            epsilon.assign(gens.size(), 1);
            for (const auto& [name, w] : eps.items())
                epsilon[static_cast<std::size_t>(gen_index(name))] = w.get<long long>();
        } else {
            throw ValidationError("'epsilon' must be an array or an object");
        }
    }

    std::optional<std::string> name;
    if (j.contains("name")) name = j["name"].get<std::string>();
    return Presentation::make(std::move(gens), std::move(relators), deleted, std::move(epsilon), std::move(name));
}

// --- representations -------------------------------------------------------

inline ordered_json matrix_to_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RationalMatrix matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw ValidationError("matrix document must be a non-empty array of rows");
    const int n = static_cast<int>(rows.size());
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ValidationError("matrix rows must all have length " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            const json& v = row[static_cast<std::size_t>(j)];
            if (v.is_string())
                m.at(i, j) = rat_from_string(v.get<std::string>());
            else if (v.is_number_integer())
                m.at(i, j) = Rat(v.get<std::int64_t>());
            else
                throw ValidationError("matrix entries must be integers or 'p/q' strings");
        }
    }
    return m;
}

// Representation file: either explicit images keyed by generator name,
// {"n": 2, "images": {"x0": [["3","0"],["1","1"]], ...}}, or the constructive
// form {"type": "cyclic", "f": {"coeffs": [-1,-1,1]}}.
inline MatrixRep representation_from_json(const json& j, const Presentation& pres) {
    if (!j.is_object()) throw ValidationError("representation document must be an object");
    if (j.contains("type")) {
        const std::string type = j["type"].get<std::string>();
        if (type == "cyclic") {
            if (!j.contains("f")) throw ValidationError("cyclic representation document needs 'f'");
            return cyclic_rep(pres, poly_from_json(j["f"]));
        }
        if (type == "trivial") {
            const int n = j.contains("n") ? j["n"].get<int>() : 1;
            return MatrixRep::verify(
                pres,
                std::vector<RationalMatrix>(static_cast<std::size_t>(pres.generator_count()),
                                            RationalMatrix::identity(n)),
                "trivial:n=" + std::to_string(n));
        }
        throw ValidationError("unknown representation type '" + type + "'");
    }
    if (!j.contains("images") || !j["images"].is_object())
        throw ValidationError("representation document needs 'images' or a constructive 'type'");
    std::vector<RationalMatrix> images;
    images.reserve(static_cast<std::size_t>(pres.generator_count()));
    for (const std::string& g : pres.generator_names()) {
        if (!j["images"].contains(g)) throw ValidationError("missing image for generator '" + g + "'");
        images.push_back(matrix_from_json(j["images"][g]));
    }
    if (j.contains("n") && !images.empty() && images[0].n() != j["n"].get<int>())
        throw ValidationError("declared dimension does not match the images");
    return MatrixRep::verify(pres, std::move(images), "file");
}

// --- reports ----------------------------------------------------------------

inline ordered_json report_to_json(const InvariantReport& r) {
    ordered_json j;
    j["presentation"] = {{"name", r.presentation_name ? ordered_json(*r.presentation_name) : ordered_json(nullptr)},
                         {"hash", r.presentation_hash},
                         {"deleted_generator", r.deleted_generator}};
    j["representation"] = {{"descriptor", r.representation}, {"n", r.dimension}, {"sl", r.sl_flag}};
    j["status"] = to_string(r.status);
    if (r.status == TorsionStatus::zero_denominator) return j;
    j["numerator"] = poly_to_json(r.numerator);
    j["denominator"] = poly_to_json(r.denominator);
    j["wada"] = {{"numerator", poly_to_json(r.wada.num())},
                 {"denominator", poly_to_json(r.wada.den())},
                 {"reciprocal", r.wada_reciprocal}};
    j["numerator_reciprocal"] = r.numerator_reciprocal;
    j["dual_verdict"] = to_string(r.dual_verdict);
    j["witness"] = r.witness ? matrix_to_json(*r.witness) : ordered_json(nullptr);
    j["dual_witness_implies_reciprocal"] = r.dual_witness_implies_reciprocal;
    return j;
}

inline std::string report_to_text(const InvariantReport& r) {
    std::string out;
    out += "presentation: " + (r.presentation_name ? *r.presentation_name : std::string("(unnamed)")) + " [" +
           r.presentation_hash + "]\n";
    out += "representation: " + r.representation + " (n=" + std::to_string(r.dimension) +
           (r.sl_flag ? ", SL" : ", GL") + ")\n";
    out += "deleted generator: " + r.deleted_generator + "\n";
    out += std::string("status: ") + to_string(r.status) + "\n";
    if (r.status == TorsionStatus::zero_denominator) return out;
    out += "numerator D(t): " + r.numerator.to_string() + "\n";
    out += "denominator: " + r.denominator.to_string() + "\n";
    out += "wada: " + r.wada.to_string() + "\n";
    out += std::string("wada reciprocal: ") + (r.wada_reciprocal ? "yes" : "no") + "\n";
    out += std::string("numerator reciprocal: ") + (r.numerator_reciprocal ? "yes" : "no") + "\n";
    out += std::string("dual verdict: ") + to_string(r.dual_verdict) + "\n";
    if (r.witness) out += "witness: " + r.witness->to_string() + "\n";
    out += std::string("duality consistency (witness & SL => reciprocal): ") +
           (r.dual_witness_implies_reciprocal ? "ok" : "VIOLATED") + "\n";
    return out;
}

}  // namespace talex
