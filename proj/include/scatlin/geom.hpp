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

#ifndef SCATLIN_GEOM_HPP
#define SCATLIN_GEOM_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace scatlin {

/// Subspace of PG(5, q^6), stored as the reduced echelon basis of its
/// underlying vector subspace of F_{q^6}^6.
class ProjSubspace {
public:
    static constexpr std::size_t ambient = 6;

    ProjSubspace(FieldPtr F, const Matrix& spanning) : F_(std::move(F)), basis_(rref(*F_, spanning)) {
        if (spanning.cols() != ambient) throw Error(ErrorKind::InvalidParameter, "vectors must have 6 coordinates");
    }

    static ProjSubspace empty(FieldPtr F) {
        Matrix m(0, ambient, F->zero());
        return {std::move(F), m};
    }
    static ProjSubspace whole(FieldPtr F) { return {F, identity(*F, ambient)}; }
    /// Solution space of rows . x = 0.
    static ProjSubspace from_equations(FieldPtr F, const Matrix& rows) { return {F, nullspace(*F, rows)}; }

    const FieldPtr& field() const noexcept { return F_; }
    const Matrix& basis() const noexcept { return basis_; }
    /// Projective dimension; the empty subspace has dimension -1.
    int dim() const noexcept { return static_cast<int>(basis_.rows()) - 1; }

    /// Rows spanning the annihilator, i.e. a defining system of equations.
    Matrix equations() const {
        if (basis_.rows() == 0) return identity(*F_, ambient);
        return nullspace(*F_, basis_);
    }

    bool contains(std::span<const Elem> v) const {
        const Matrix eq = equations();
        for (std::size_t i = 0; i < eq.rows(); ++i) {
            Elem acc = F_->zero();
            for (std::size_t j = 0; j < ambient; ++j) acc = F_->add(acc, F_->mul(eq(i, j), v[j]));
            if (!F_->is_zero(acc)) return false;
        }
        return true;
    }

    friend bool operator==(const ProjSubspace& a, const ProjSubspace& b) {
        return a.F_ == b.F_ && a.basis_ == b.basis_;
    }

private:
    FieldPtr F_;
    Matrix basis_;
};

/// Gamma: x_0 = 0, h^{q-1} x_1 - h^{q^2-1} x_2 + x_4 + x_5 = 0.
inline ProjSubspace gamma_of(const FieldPtr& Fp, Elem h) {
    const Field& F = *Fp;
    if (F.is_zero(h)) throw Error(ErrorKind::ZeroParameter, "h must be nonzero");
    const u64 q = F.q();
    Matrix eq(2, 6, F.zero());
    eq(0, 0) = F.one();
    eq(1, 1) = F.pow(h, q - 1);
    eq(1, 2) = F.neg(F.pow(h, q * q - 1));
    eq(1, 4) = F.one();
    eq(1, 5) = F.one();
    return ProjSubspace::from_equations(Fp, eq);
}

/// (x_0, ..., x_5) -> (x_5^q, x_0^q, ..., x_4^q), applied `iterations` times.
inline std::array<Elem, 6> sigma_hat(const Field& F, std::array<Elem, 6> v, unsigned iterations = 1) {
    for (unsigned it = 0; it < iterations % 6; ++it) {
        std::array<Elem, 6> w;
        w[0] = F.frob(v[5], 1);
        for (std::size_t i = 1; i < 6; ++i) w[i] = F.frob(v[i - 1], 1);
        v = w;
    }
    return v;
}

inline ProjSubspace sigma_hat(const ProjSubspace& S, unsigned iterations = 1) {
    const Field& F = *S.field();
    Matrix img(0, 6, F.zero());
    for (std::size_t i = 0; i < S.basis().rows(); ++i) {
        std::array<Elem, 6> v;
        std::copy_n(S.basis().row(i).begin(), 6, v.begin());
        const auto w = sigma_hat(F, v, iterations);
        img.append_row(w);
    }
    return {S.field(), img};
}

inline ProjSubspace intersect(const ProjSubspace& S, const ProjSubspace& T) {
    if (S.field() != T.field()) throw Error(ErrorKind::CtxMismatch, "subspaces over different fields");
    Matrix eq = S.equations();
    const Matrix et = T.equations();
    for (std::size_t i = 0; i < et.rows(); ++i) eq.append_row(et.row(i));
    return ProjSubspace::from_equations(S.field(), eq);
}

/// The point <(x, x^q, ..., x^{q^5})> of the canonical subgeometry.
inline std::array<Elem, 6> subgeometry_point(const Field& F, Elem x) {
    std::array<Elem, 6> v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = F.frob(x, static_cast<long long>(i));
    return v;
}

/// Some x != 0 whose subgeometry point lies in S. Every x is tried when the
/// field has at most `full_limit` elements, otherwise `samples` random ones.
inline std::optional<Elem> meets_subgeometry(const ProjSubspace& S, u64 full_limit = u64{1} << 20,
                                             u64 samples = 4096) {
    const Field& F = *S.field();
    const Matrix eq = S.equations();
    auto hit = [&](Elem x) {
        const auto v = subgeometry_point(F, x);
        for (std::size_t i = 0; i < eq.rows(); ++i) {
            Elem acc = F.zero();
            for (std::size_t j = 0; j < 6; ++j) acc = F.add(acc, F.mul(eq(i, j), v[j]));
            if (!F.is_zero(acc)) return false;
        }
        return true;
    };
    if (F.size() <= full_limit) {
        for (u64 i = 1; i < F.size(); ++i)
            if (hit(F.at(i))) return F.at(i);
        return std::nullopt;
    }
    std::mt19937_64 rng(0x5ca771e5ULL);
    std::uniform_int_distribution<u64> pick(1, F.size() - 1);
    for (u64 k = 0; k < samples; ++k) {
        const Elem x = F.at(pick(rng));
        if (hit(x)) return x;
    }
    return std::nullopt;
}

struct IntnResult {
    unsigned intn = 0;
    /// dim(S), dim(S cap S^sigma), dim(S cap S^sigma cap S^{sigma^2}), ... up to the r-th term.
    std::vector<int> dims_chain;
};

/// Least r >= 1 with dim(S cap S^sigma cap ... cap S^{sigma^r}) > k - 2r,
/// where sigma = sigma_hat^power and k = dim S.
inline IntnResult intn(const ProjSubspace& S, unsigned power = 1) {
    if (power != 1 && power != 5) throw Error(ErrorKind::InvalidParameter, "power must be 1 or 5");
    const int k = S.dim();
    if (k < 0) throw Error(ErrorKind::PreconditionFailed, "subspace is empty");
    if (auto x = meets_subgeometry(S))
        throw Error(ErrorKind::PreconditionFailed, "subspace meets the canonical subgeometry at x = " +
                                                       S.field()->format(*x));
    IntnResult out;
    out.dims_chain.push_back(k);
    ProjSubspace acc = S;
    for (unsigned r = 1; r <= 7; ++r) {
        acc = intersect(acc, sigma_hat(S, power * r));
        const int d = acc.dim();
        out.dims_chain.push_back(d);
        if (r == 1 && d < k - 2)
            throw Error(ErrorKind::PreconditionFailed, "dim(S cap S^sigma) = " + std::to_string(d) +
                                                           " is below k - 2 = " + std::to_string(k - 2));
        if (d > k - 2 * static_cast<int>(r)) {
            out.intn = r;
            return out;
        }
    }
    throw Error(ErrorKind::PreconditionFailed, "intersection chain did not terminate");
}

}  // namespace scatlin

#endif  // SCATLIN_GEOM_HPP
