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

#include <optional>
#include <string>
#include <utility>

#include "talex/rational_function.hpp"
#include "talex/resultant.hpp"
#include "talex/twisted.hpp"

namespace talex {

enum class TorsionStatus {
    defined,
    zero_numerator,    // torsion undefined: det of the deleted matrix vanishes
    zero_denominator,  // Wada quotient undefined: det Phi(x_del - 1) vanishes
};

inline const char* to_string(TorsionStatus s) {
    switch (s) {
        case TorsionStatus::defined: return "defined";
        case TorsionStatus::zero_numerator: return "torsion-undefined";
        default: return "undefined";
    }
}

// Everything computed for one (presentation, representation, deleted column)
// triple. Polynomials are canonical integral representatives of their unit
// classes; `wada` is the reduced quotient numerator/denominator.
struct InvariantReport {
    TorsionStatus status = TorsionStatus::defined;

    IntLaurent numerator;    // det of the column-deleted twisted matrix
    IntLaurent denominator;  // det Phi(x_deleted - 1)
    RationalFunction wada;

    bool numerator_reciprocal = false;
    bool wada_reciprocal = false;

    DualVerdict dual_verdict = DualVerdict::none_caveat;
    std::optional<RationalMatrix> witness;
    // (witness found and all images have determinant 1) implies reciprocal
    // Wada invariant; false would contradict the duality argument.
    bool dual_witness_implies_reciprocal = true;

    bool sl_flag = false;
    int dimension = 0;
    std::string deleted_generator;
    std::optional<std::string> presentation_name;
    std::string presentation_hash;
    std::string representation;
};

namespace detail {

// Canonical integral representative: exact unit normalization for integral
// determinants, primitive rescaling for genuinely rational ones.
inline IntLaurent report_polynomial(const RatLaurent& p) {
    if (is_integral(p)) return unit_normalize(to_integral(p));
    return canonical_integral(p);
}

}  // namespace detail

// Computes the Wada invariant, its numerator/denominator, reciprocality
// verdicts, and the dual-conjugacy verdict. `deleted` defaults to the
// presentation's distinguished generator.
inline InvariantReport wada_report(const MatrixRep& rep, const std::optional<std::string>& deleted = std::nullopt) {
    const Presentation& pres = rep.presentation();
    const std::string del_name = deleted ? *deleted : pres.deleted_generator();
    const int del = pres.index_of(del_name);

    InvariantReport rpt;
    rpt.sl_flag = rep.sl_flag();
    rpt.dimension = rep.n();
    rpt.deleted_generator = del_name;
    rpt.presentation_name = pres.name();
    rpt.presentation_hash = pres.hash_hex();
    rpt.representation = rep.descriptor();

    const RatLaurent den = det_laurent(phi_generator_minus_one(rep, del));
    if (den.is_zero()) {
        rpt.status = TorsionStatus::zero_denominator;
        return rpt;
    }

    const TwistedMatrix twisted = build_twisted(pres, rep);
    const RatLaurent num = det_laurent(delete_column(twisted, pres, del_name));

    rpt.numerator = detail::report_polynomial(num);
    rpt.denominator = detail::report_polynomial(den);
    rpt.wada = RationalFunction::make(num, den);
    rpt.numerator_reciprocal = is_reciprocal(rpt.numerator);
    rpt.wada_reciprocal = rpt.wada.is_reciprocal();

    const DualWitnessResult dual = conj_to_dual_witness(rep);
    rpt.dual_verdict = dual.verdict;
    rpt.witness = dual.witness;
    rpt.dual_witness_implies_reciprocal =
        !(dual.verdict == DualVerdict::witness && rep.sl_flag() && !rpt.wada_reciprocal);

    if (num.is_zero()) rpt.status = TorsionStatus::zero_numerator;
    return rpt;
}

// Untwisted (trivial one-dimensional representation) determinant of the
// column-deleted Fox matrix; the classical Alexander polynomial for knot
// presentations. Unit-normalized.
inline IntLaurent untwisted_alexander_det(const Presentation& pres,
                                          const std::optional<std::string>& deleted = std::nullopt) {
    const MatrixRep triv = MatrixRep::verify(
        pres, std::vector<RationalMatrix>(static_cast<std::size_t>(pres.generator_count()), RationalMatrix::identity(1)),
        "trivial:n=1");
    const std::string del_name = deleted ? *deleted : pres.deleted_generator();
    const TwistedMatrix twisted = build_twisted(pres, triv);
    const RatLaurent det = det_laurent(delete_column(twisted, pres, del_name));
    return unit_normalize(to_integral(det));
}

// Product of delta(t lambda) over the eigenvalues lambda of the companion
// matrix of (t-1) f(t), computed exactly as a resultant after clearing lambda
// powers. Unit-normalized.
inline IntLaurent product_over_eigenvalues(const IntLaurent& delta, const IntLaurent& f) {
    if (f.is_zero() || f.lowest_degree() < 0 || f.degree() < 1)
        throw PreconditionError("f must be an ordinary polynomial of degree >= 1");
    if (delta.is_zero()) return {};

    const IntLaurent p_poly = (IntLaurent::t() - IntLaurent(1)) * f;
    LambdaPoly<Int> p(static_cast<std::size_t>(p_poly.degree()) + 1);
    for (int d = 0; d <= p_poly.degree(); ++d) p[static_cast<std::size_t>(d)] = IntLaurent(p_poly.coeff(d));

    // delta(t lambda): the t^d term contributes coefficient c t^d to lambda^d;
    // shift by the lowest degree so the lambda polynomial is ordinary.
    const int low = delta.lowest_degree();
    LambdaPoly<Int> q(static_cast<std::size_t>(delta.degree() - low) + 1);
    for (const auto& [d, c] : delta.coeffs()) q[static_cast<std::size_t>(d - low)] = IntLaurent::monomial(d, c);

    return unit_normalize(resultant(p, q));
}

// The cyclic-representation determinant via the product formula
// det M0 = prod over eigenvalues of det M(t lambda), with M the untwisted
// Alexander matrix. Independent of the block-matrix determinant path.
inline IntLaurent cyclic_det_via_products(const Presentation& pres, const IntLaurent& f,
                                          const std::optional<std::string>& deleted = std::nullopt) {
    if (!pres.is_wirtinger())
        throw PreconditionError("the product formula applies to Wirtinger-shaped presentations");
    return product_over_eigenvalues(untwisted_alexander_det(pres, deleted), f);
}

}  // namespace talex
