/*
   Copyright 2026 The scatlin Authors

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

#ifndef SCATLIN_LINALG_HPP
#define SCATLIN_LINALG_HPP

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "field.hpp"

namespace scatlin {

/// Dense row-major matrix of field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Elem fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Elem> data() noexcept { return data_; }
    std::span<const Elem> data() const noexcept { return data_; }

    void append_row(std::span<const Elem> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

namespace detail {

// In-place forward elimination on a rows x cols block. The pivot of each
// column is the first nonzero entry in row order. Returns (rank, det-sign
// adjusted product of pivots); the product is only meaningful for square input.
inline std::pair<std::size_t, Elem> forward_eliminate(const Field& F, std::span<Elem> a, std::size_t rows,
                                                       std::size_t cols) {
    std::size_t r = 0;
    Elem det = F.one();
    bool negate = false;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!F.is_zero(a[i * cols + c])) {
                piv = i;
                break;
            }
        if (piv == rows) {
            det = F.zero();
            continue;
        }
        if (piv != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
            negate = !negate;
        }
        const Elem p = a[r * cols + c];
        det = F.mul(det, p);
        const Elem pinv = F.inv(p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Elem v = a[i * cols + c];
            if (F.is_zero(v)) continue;
            const Elem factor = F.neg(F.mul(v, pinv));
            a[i * cols + c] = F.zero();
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i * cols + j] = F.add(a[i * cols + j], F.mul(factor, a[r * cols + j]));
        }
        ++r;
    }
    if (r < rows) det = F.zero();
    if (negate) det = F.neg(det);
    return {r, det};
}

}  // namespace detail

/// Determinant of an n x n block stored row-major; no allocation.
template <std::size_t N>
Elem det_fixed(const Field& F, std::array<Elem, N * N> a) {
    return detail::forward_eliminate(F, a, N, N).second;
}

inline Elem det(const Field& F, Matrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidParameter, "determinant of a non-square matrix");
    if (m.rows() == 0) return F.one();
    return detail::forward_eliminate(F, m.data(), m.rows(), m.cols()).second;
}

inline std::size_t rank(const Field& F, Matrix m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::forward_eliminate(F, m.data(), m.rows(), m.cols()).first;
}

/// Reduced row echelon form with zero rows removed; pivot columns optional.
inline Matrix rref(const Field& F, const Matrix& in, std::vector<std::size_t>* pivots = nullptr) {
    Matrix m = in;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!F.is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Elem inv = F.inv(m(r, c));
        for (std::size_t j = 0; j < cols; ++j) m(r, j) = F.mul(m(r, j), inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || F.is_zero(m(i, c))) continue;
            const Elem factor = F.neg(m(i, c));
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = F.add(m(i, j), F.mul(factor, m(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    Matrix out(0, cols, F.zero());
    for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
    if (pivots) *pivots = std::move(piv);
    return out;
}

/// Basis (as rows) of {x : m x = 0}.
inline Matrix nullspace(const Field& F, const Matrix& m) {
    const std::size_t cols = m.cols();
    std::vector<std::size_t> piv;
    const Matrix red = rref(F, m, &piv);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    Matrix out(0, cols, F.zero());
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<Elem> v(cols, F.zero());
        v[free] = F.one();
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(red(i, free));
        out.append_row(v);
    }
    return out;
}

inline Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidParameter, "matrix shapes do not compose");
    Matrix c(a.rows(), b.cols(), F.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (F.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(a(i, k), b(k, j)));
        }
    return c;
}

inline Matrix identity(const Field& F, std::size_t n) {
    Matrix m(n, n, F.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F.one();
    return m;
}

inline Matrix inverse(const Field& F, const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorKind::InvalidParameter, "matrix is not square");
    Matrix aug(n, 2 * n, F.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F.one();
    }
    std::vector<std::size_t> piv;
    const Matrix red = rref(F, aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorKind::DivisionByZero, "matrix is singular");
    Matrix out(n, n, F.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = red(i, n + j);
    return out;
}

}  // namespace scatlin

#endif  // SCATLIN_LINALG_HPP
