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

#include <string_view>
#include <utility>

#include "talex/group_ring.hpp"
#include "talex/poly_matrix.hpp"
#include "talex/representation.hpp"

namespace talex {

// The ring homomorphism g -> t^epsilon(g) gamma(g) on a single word.
inline RatPolyMat phi(const Word& w, const MatrixRep& rep) {
    const long long e = exponent_sum(w, rep.presentation().epsilon());
    const RationalMatrix g = rep.image_of_word(w);
    RatPolyMat m(rep.n(), rep.n());
    for (int i = 0; i < rep.n(); ++i)
        for (int j = 0; j < rep.n(); ++j) m.at(i, j) = RatLaurent::monomial(static_cast<int>(e), g.at(i, j));
    return m;
}

// Z-linear extension to group-ring elements; a ring homomorphism into n x n
// matrices over the Laurent polynomials.
inline RatPolyMat phi(const GroupRingElement& e, const MatrixRep& rep) {
    RatPolyMat m(rep.n(), rep.n());
    for (const auto& [w, c] : e.terms()) {
        const RatPolyMat term = phi(w, rep);
        const RatLaurent s{Rat(c)};
        m = m + s * term;
    }
    return m;
}

// Convenience for the Wada denominator: Phi(x_gen - 1).
inline RatPolyMat phi_generator_minus_one(const MatrixRep& rep, int gen) {
    GroupRingElement e = GroupRingElement::from_word(Word::generator(gen)) - GroupRingElement::one();
    return phi(e, rep);
}

// The k x (k+1) grid of n x n blocks Phi(dr_i / dx_j), stored flattened as a
// (k n) x ((k+1) n) Laurent matrix.
class TwistedMatrix {
   public:
    TwistedMatrix(const MatrixRep& rep, RatPolyMat full)
        : k_(rep.presentation().relator_count()), n_(rep.n()), full_(std::move(full)) {}

    int relator_rows() const { return k_; }
    int block_size() const { return n_; }
    const RatPolyMat& full() const { return full_; }

    RatPolyMat block(int i, int j) const {
        RatPolyMat b(n_, n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) b.at(r, c) = full_.at(i * n_ + r, j * n_ + c);
        return b;
    }

   private:
    int k_;
    int n_;
    RatPolyMat full_;
};

inline TwistedMatrix build_twisted(const Presentation& pres, const MatrixRep& rep) {
    if (!(pres == rep.presentation()))
        throw PreconditionError("representation was verified against a different presentation");
    const int k = pres.relator_count();
    const int n = rep.n();
    RatPolyMat full(k * n, (k + 1) * n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= k; ++j) {
            const RatPolyMat b = phi(fox_derivative(pres.relators()[static_cast<std::size_t>(i)], j), rep);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) full.at(i * n + r, j * n + c) = b.at(r, c);
        }
    return TwistedMatrix(rep, std::move(full));
}

// Image of the fundamental Fox identity: for every row i,
// sum_j Block(i,j) * Phi(x_j - 1) = 0, since gamma(r_i) = I and eps(r_i) = 0.
inline bool row_identity_holds(const TwistedMatrix& m, const MatrixRep& rep) {
    const int k = m.relator_rows();
    const int n = m.block_size();
    for (int i = 0; i < k; ++i) {
        RatPolyMat acc(n, n);
        for (int j = 0; j <= k; ++j) acc = acc + m.block(i, j) * phi_generator_minus_one(rep, j);
        if (!acc.is_zero()) return false;
    }
    return true;
}

// Deletes the block column of the given generator, yielding the square
// (k n) x (k n) matrix whose determinant is the Wada numerator.
inline RatPolyMat delete_column(const TwistedMatrix& m, const Presentation& pres, std::string_view gen) {
    const int del = pres.index_of(gen);  // throws for unknown generators
    const int k = m.relator_rows();
    const int n = m.block_size();
    RatPolyMat out(k * n, k * n);
    for (int i = 0; i < k * n; ++i) {
        int oc = 0;
        for (int j = 0; j <= k; ++j) {
            if (j == del) continue;
            for (int c = 0; c < n; ++c) out.at(i, oc * n + c) = m.full().at(i, j * n + c);
            ++oc;
        }
    }
    return out;
}

}  // namespace talex
