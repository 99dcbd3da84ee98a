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

#include <cstddef>
#include <vector>

#include "talex/poly_matrix.hpp"

namespace talex {

// Polynomial in an auxiliary variable (written lambda throughout) whose
// coefficients are Laurent polynomials in t. Ascending lambda-degree; trailing
// zero coefficients are ignored.
template <class C>
using LambdaPoly = std::vector<Laurent<C>>;

namespace detail {

template <class C>
int lambda_degree(const LambdaPoly<C>& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (!p[static_cast<std::size_t>(d)].is_zero()) return d;
    return -1;
}

}  // namespace detail

// Resultant with respect to lambda, computed as the determinant of the
// Sylvester matrix (p rows first) by fraction-free elimination. Satisfies
// Res(p, q1 q2) = Res(p, q1) Res(p, q2). A lambda-degree-0 argument makes the
// resultant degenerate to the explicit power lc^deg(other); zero polynomials
// are rejected.
inline RatLaurent resultant(const LambdaPoly<Rat>& p, const LambdaPoly<Rat>& q) {
    const int m = detail::lambda_degree(p);
    const int n = detail::lambda_degree(q);
    if (m < 0 || n < 0) throw PreconditionError("resultant of a zero polynomial");
    if (m == 0) return p[0].pow(static_cast<unsigned>(n));
    if (n == 0) return q[0].pow(static_cast<unsigned>(m));

    RatPolyMat s(m + n, m + n);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s.at(r, r + i) = p[static_cast<std::size_t>(m - i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s.at(n + r, r + i) = q[static_cast<std::size_t>(n - i)];
    return det_laurent(std::move(s));
}

inline IntLaurent resultant(const LambdaPoly<Int>& p, const LambdaPoly<Int>& q) {
    LambdaPoly<Rat> pr, qr;
    pr.reserve(p.size());
    qr.reserve(q.size());
    for (const auto& c : p) pr.push_back(to_rational(c));
    for (const auto& c : q) qr.push_back(to_rational(c));
    return to_integral(resultant(pr, qr));
}

namespace detail {

// Checks the standing assumptions on f used by the cyclic construction's
// g(t): monic ordinary polynomial, constant coefficient -1, f(1) = +-1.
inline void check_g_preconditions(const IntLaurent& f) {
    if (f.is_zero() || f.lowest_degree() < 0 || f.degree() < 1)
        throw PreconditionError("f must be an ordinary polynomial of degree >= 1");
    if (f.leading_coeff() != 1) throw PreconditionError("f must be monic");
    if (f.coeff(0) != -1) throw PreconditionError("f must have constant coefficient -1");
    const Rat f1 = to_rational(f).evaluate(1);
    if (f1 != 1 && f1 != -1) throw PreconditionError("f(1) must be +1 or -1");
}

}  // namespace detail

// Product of f(t lambda) f(t^-1 lambda^-1) over the roots lambda of f, as a
// product of two resultants with lambda and t denominators cleared first.
// No precondition checks; g_of_f is the checked entry point. The result is
// unit-normalized, which absorbs the cleared unit factors.
inline IntLaurent g_product(const IntLaurent& f) {
    if (f.is_zero() || f.lowest_degree() < 0 || f.degree() < 1 || f.coeff(0) == 0)
        throw PreconditionError("g product needs an ordinary polynomial with nonzero constant term");
    const int n = f.degree();

    LambdaPoly<Int> f_lambda(static_cast<std::size_t>(n) + 1);
    LambdaPoly<Int> f_t_lambda(static_cast<std::size_t>(n) + 1);   // f(t lambda)
    LambdaPoly<Int> f_inv_cleared(static_cast<std::size_t>(n) + 1);  // t^n lambda^n f(t^-1 lambda^-1)
    for (int i = 0; i <= n; ++i) {
        const Int a = f.coeff(i);
        f_lambda[static_cast<std::size_t>(i)] = IntLaurent(a);
        f_t_lambda[static_cast<std::size_t>(i)] = IntLaurent::monomial(i, a);
        f_inv_cleared[static_cast<std::size_t>(n - i)] = IntLaurent::monomial(n - i, a);
    }
    return unit_normalize(resultant(f_lambda, f_t_lambda) * resultant(f_lambda, f_inv_cleared));
}

// g(t) for the cyclic companion construction, under its standing assumptions
// on f. Exact; never extracts roots.
inline IntLaurent g_of_f(const IntLaurent& f) {
    detail::check_g_preconditions(f);
    return g_product(f);
}

}  // namespace talex
