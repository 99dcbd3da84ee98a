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
#include <string>
#include <utility>
#include <vector>

#include "talex/errors.hpp"
#include "talex/numbers.hpp"

namespace talex {

// Square matrix with exact rational entries.
class RationalMatrix {
   public:
    RationalMatrix() = default;
    explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static RationalMatrix identity(int n) {
        RationalMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int n() const { return n_; }

    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
        RationalMatrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                if (x.at(i, k) == 0) continue;
                for (int j = 0; j < x.n_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    friend RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y) {
        RationalMatrix r(x.n_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }

    friend RationalMatrix operator-(const RationalMatrix& x, const RationalMatrix& y) {
        RationalMatrix r(x.n_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }

    friend RationalMatrix operator*(const Rat& s, const RationalMatrix& x) {
        RationalMatrix r(x.n_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = s * x.a_[i];
        return r;
    }

    RationalMatrix transpose() const {
        RationalMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Rat determinant() const {
        RationalMatrix m = *this;
        Rat det = 1;
        for (int k = 0; k < n_; ++k) {
            int piv = -1;
            for (int i = k; i < n_; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            if (piv != k) {
                for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(k, j));
                det = -det;
            }
            det *= m.at(k, k);
            for (int i = k + 1; i < n_; ++i) {
                if (m.at(i, k) == 0) continue;
                const Rat f = m.at(i, k) / m.at(k, k);
                for (int j = k; j < n_; ++j) m.at(i, j) -= f * m.at(k, j);
            }
        }
        return det;
    }

    bool is_invertible() const { return determinant() != 0; }

    RationalMatrix inverse() const {
        RationalMatrix m = *this;
        RationalMatrix inv = identity(n_);
        for (int k = 0; k < n_; ++k) {
            int piv = -1;
            for (int i = k; i < n_; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw SingularMatrixError("matrix is singular");
            if (piv != k)
                for (int j = 0; j < n_; ++j) {
                    std::swap(m.at(piv, j), m.at(k, j));
                    std::swap(inv.at(piv, j), inv.at(k, j));
                }
            const Rat d = m.at(k, k);
            for (int j = 0; j < n_; ++j) {
                m.at(k, j) /= d;
                inv.at(k, j) /= d;
            }
            for (int i = 0; i < n_; ++i) {
                if (i == k || m.at(i, k) == 0) continue;
                const Rat f = m.at(i, k);
                for (int j = 0; j < n_; ++j) {
                    m.at(i, j) -= f * m.at(k, j);
                    inv.at(i, j) -= f * inv.at(k, j);
                }
            }
        }
        return inv;
    }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    std::string to_string() const {
        std::string out = "[";
        for (int i = 0; i < n_; ++i) {
            out += i ? ", [" : "[";
            for (int j = 0; j < n_; ++j) {
                if (j) out += ", ";
                out += talex::to_string(at(i, j));
            }
            out += "]";
        }
        return out + "]";
    }

   private:
    int n_ = 0;
    std::vector<Rat> a_;
};

namespace detail {

// Reduced row echelon form in place; returns the pivot column of each row.
inline std::vector<int> rref(std::vector<std::vector<Rat>>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(r)]);
        const Rat d = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

// Basis of the rational nullspace of a rows x cols system, one vector per free
// column, in ascending free-column order.
inline std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> a, int cols) {
    std::vector<int> pivots = detail::rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -a[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace talex
