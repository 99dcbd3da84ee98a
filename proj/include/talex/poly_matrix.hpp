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
#include <utility>
#include <vector>

#include "talex/laurent.hpp"

namespace talex {

// Dense rows x cols matrix with Laurent polynomial entries.
template <class C>
class PolyMat {
   public:
    PolyMat() = default;
    PolyMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static PolyMat identity(int n) {
        PolyMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Laurent<C>(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Laurent<C>& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Laurent<C>& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend PolyMat operator+(const PolyMat& a, const PolyMat& b) {
        PolyMat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    friend PolyMat operator-(const PolyMat& a, const PolyMat& b) {
        PolyMat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }

    friend PolyMat operator*(const PolyMat& a, const PolyMat& b) {
        PolyMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    friend PolyMat operator*(const Laurent<C>& s, const PolyMat& a) {
        PolyMat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = s * a.e_[i];
        return r;
    }

    friend bool operator==(const PolyMat&, const PolyMat&) = default;

   private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Laurent<C>> e_;
};

using RatPolyMat = PolyMat<Rat>;

namespace detail {

// Factors the unit t^(column minimum degree) out of every column so that all
// entries become ordinary polynomials. Returns the total extracted power, or
// reports a zero column (determinant 0) through the flag.
template <class C>
int clear_column_units(PolyMat<C>& m, bool& zero_column) {
    int total = 0;
    zero_column = false;
    for (int j = 0; j < m.cols(); ++j) {
        bool any = false;
        int low = 0;
        for (int i = 0; i < m.rows(); ++i) {
            if (m.at(i, j).is_zero()) continue;
            const int l = m.at(i, j).lowest_degree();
            low = any ? (l < low ? l : low) : l;
            any = true;
        }
        if (!any) {
            zero_column = true;
            return 0;
        }
        if (low != 0) {
            for (int i = 0; i < m.rows(); ++i)
                if (!m.at(i, j).is_zero()) m.at(i, j) = m.at(i, j).shifted(-low);
            total += low;
        }
    }
    return total;
}

}  // namespace detail

// Exact determinant of a square Laurent polynomial matrix. Column unit factors
// are cleared first, then fraction-free (Bareiss) elimination runs over the
// polynomial ring; every division is by a previous pivot and is exact.
inline RatLaurent det_laurent(RatPolyMat m) {
    const int n = m.rows();
    if (n != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    if (n == 0) return RatLaurent(1);

    bool zero_column = false;
    const int unit_power = detail::clear_column_units(m, zero_column);
    if (zero_column) return {};

    int sign = 1;
    RatLaurent prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    r = i;
                    break;
                }
            if (r < 0) return {};
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = divexact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    RatLaurent det = m.at(n - 1, n - 1).shifted(unit_power);
    return sign < 0 ? -det : det;
}

namespace detail {

// Determinant of a rational matrix by Gaussian elimination.
inline Rat rat_det(std::vector<std::vector<Rat>> a) {
    const int n = static_cast<int>(a.size());
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rat f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

}  // namespace detail

// Independent determinant path: evaluate at degree-bound + 1 integer points
// and interpolate (Newton form). Serves as a cross-check for det_laurent.
inline RatLaurent det_laurent_interpolated(RatPolyMat m) {
    const int n = m.rows();
    if (n != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    if (n == 0) return RatLaurent(1);

    bool zero_column = false;
    const int unit_power = detail::clear_column_units(m, zero_column);
    if (zero_column) return {};

    // Degree bound: sum over rows of the largest entry degree.
    int bound = 0;
    for (int i = 0; i < n; ++i) {
        int row_max = 0;
        for (int j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero() && m.at(i, j).degree() > row_max) row_max = m.at(i, j).degree();
        bound += row_max;
    }

    std::vector<Rat> xs, ys;
    xs.reserve(bound + 1);
    ys.reserve(bound + 1);
    for (int p = 0; p <= bound; ++p) {
        // t = 0 is a valid point: entries are ordinary polynomials after clearing
        std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) num[i][j] = m.at(i, j).evaluate(Rat(p));
        xs.emplace_back(p);
        ys.push_back(detail::rat_det(std::move(num)));
    }

    // Newton divided differences, then Horner expansion into coefficients.
    std::vector<Rat> dd = ys;
    for (int level = 1; level <= bound; ++level)
        for (int i = bound; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    RatLaurent poly;
    for (int i = bound; i >= 0; --i) {
        poly = poly * (RatLaurent::t() - RatLaurent(xs[i]));
        poly = poly + RatLaurent(dd[i]);
    }
    return poly.shifted(unit_power);
}

}  // namespace talex
