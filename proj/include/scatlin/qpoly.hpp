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

#ifndef SCATLIN_QPOLY_HPP
#define SCATLIN_QPOLY_HPP

#include <array>
#include <cstddef>
#include <optional>

#include "field.hpp"
#include "linalg.hpp"

namespace scatlin {

/// A q-polynomial sum_{i<6} a_i x^{q^i} over F_{q^6}; coefficient i multiplies x^{q^i}.
class QPoly {
public:
    using Coeffs = std::array<Elem, 6>;

    explicit QPoly(FieldPtr F) : F_(std::move(F)) { c_.fill(F_->zero()); }
    QPoly(FieldPtr F, const Coeffs& c) : F_(std::move(F)), c_(c) {}

    static QPoly identity(FieldPtr F) { return monomial(std::move(F), 0); }

    /// c * x^{q^i}
    static QPoly monomial(FieldPtr F, int i, std::optional<Elem> c = std::nullopt) {
        QPoly f(F);
        f.c_[static_cast<std::size_t>(((i % 6) + 6) % 6)] = c.value_or(F->one());
        return f;
    }

    const FieldPtr& field() const noexcept { return F_; }
    const Coeffs& coeffs() const noexcept { return c_; }
    Elem operator[](std::size_t i) const { return c_[i]; }
    void set(std::size_t i, Elem e) { c_[i] = e; }

    bool is_zero() const {
        for (auto e : c_)
            if (!F_->is_zero(e)) return false;
        return true;
    }

    /// True when only the x coefficient may be nonzero, i.e. the map is F_{q^6}-linear.
    bool is_scalar() const {
        for (std::size_t i = 1; i < 6; ++i)
            if (!F_->is_zero(c_[i])) return false;
        return true;
    }

    void require_same(const QPoly& o) const {
        if (F_.get() != o.F_.get()) throw Error(ErrorKind::CtxMismatch, "q-polynomials over different fields");
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.F_.get() == b.F_.get() && a.c_ == b.c_; }

private:
    FieldPtr F_;
    Coeffs c_;
};

inline Elem evaluate(const QPoly& f, Elem x) {
    const Field& F = *f.field();
    Elem r = F.zero();
    for (int i = 0; i < 6; ++i) {
        if (F.is_zero(f[i])) continue;
        r = F.add(r, F.mul(f[i], F.frob(x, i)));
    }
    return r;
}

inline FieldElem evaluate(const QPoly& f, const FieldElem& x) {
    if (x.ctx().get() != f.field().get()) throw Error(ErrorKind::CtxMismatch, "point outside the polynomial's field");
    return {f.field(), evaluate(f, x.raw())};
}

inline QPoly add(const QPoly& f, const QPoly& g) {
    f.require_same(g);
    const Field& F = *f.field();
    QPoly r(f.field());
    for (std::size_t i = 0; i < 6; ++i) r.set(i, F.add(f[i], g[i]));
    return r;
}

inline QPoly sub(const QPoly& f, const QPoly& g) {
    f.require_same(g);
    const Field& F = *f.field();
    QPoly r(f.field());
    for (std::size_t i = 0; i < 6; ++i) r.set(i, F.sub(f[i], g[i]));
    return r;
}

/// x -> c * f(x)
inline QPoly scale(Elem c, const QPoly& f) {
    const Field& F = *f.field();
    QPoly r(f.field());
    for (std::size_t i = 0; i < 6; ++i) r.set(i, F.mul(c, f[i]));
    return r;
}

/// f(x) - m x
inline QPoly shift(const QPoly& f, Elem m) {
    QPoly r = f;
    r.set(0, f.field()->sub(f[0], m));
    return r;
}

/// Coefficientwise x -> x^{p^e}: the polynomial f^rho for rho = p^e-power.
inline QPoly apply_automorphism(const QPoly& f, long long e) {
    const Field& F = *f.field();
    QPoly r(f.field());
    for (std::size_t i = 0; i < 6; ++i) r.set(i, F.frob_p(f[i], e));
    return r;
}

/// f(g(x)) reduced modulo x^{q^6} - x: c_k = sum_{i+j=k mod 6} a_i b_j^{q^i}.
inline QPoly compose(const QPoly& f, const QPoly& g) {
    f.require_same(g);
    const Field& F = *f.field();
    QPoly r(f.field());
    QPoly::Coeffs c;
    c.fill(F.zero());
    for (int i = 0; i < 6; ++i) {
        if (F.is_zero(f[i])) continue;
        for (int j = 0; j < 6; ++j) {
            if (F.is_zero(g[j])) continue;
            auto& slot = c[static_cast<std::size_t>((i + j) % 6)];
            slot = F.add(slot, F.mul(f[i], F.frob(g[j], i)));
        }
    }
    return {f.field(), c};
}

/// Adjoint with respect to (x, y) -> Tr_{q^6/q}(xy): slot 6-i receives a_i^{q^{6-i}}.
inline QPoly adjoint(const QPoly& f) {
    const Field& F = *f.field();
    QPoly r(f.field());
    for (int i = 0; i < 6; ++i) {
        const int k = (6 - i) % 6;
        r.set(static_cast<std::size_t>(k), F.frob(f[i], k));
    }
    return r;
}

/// Dickson matrix: entry (i, j) = a_{j-i mod 6}^{q^i}.
inline Matrix dickson(const QPoly& f) {
    const Field& F = *f.field();
    Matrix m(6, 6, F.zero());
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = F.frob(f[static_cast<std::size_t>((j - i + 6) % 6)], i);
    return m;
}

/// Dickson matrix with m substituted for a_0 (diagonal m^{q^i}), after deleting
/// the first `drop` columns and the last `drop` rows. drop 0 gives the full
/// 6x6 matrix, drop 1 the 5x5 minor used by the scatteredness criterion.
inline Matrix dickson_m(const QPoly& f, Elem m, int drop) {
    if (drop != 0 && drop != 1) throw Error(ErrorKind::BadDrop, "drop must be 0 or 1");
    const Field& F = *f.field();
    QPoly g = f;
    g.set(0, m);
    const Matrix full = dickson(g);
    const std::size_t k = static_cast<std::size_t>(6 - drop);
    Matrix out(k, k, F.zero());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = full(i, j + static_cast<std::size_t>(drop));
    return out;
}

/// dim_{F_q} ker f = 6 - rank of the Dickson matrix.
inline unsigned kernel_dim(const QPoly& f) {
    const Field& F = *f.field();
    std::array<Elem, 36> a;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            a[static_cast<std::size_t>(i * 6 + j)] = F.frob(f[static_cast<std::size_t>((j - i + 6) % 6)], i);
    return 6 - static_cast<unsigned>(detail::forward_eliminate(F, a, 6, 6).first);
}

}  // namespace scatlin

#endif  // SCATLIN_QPOLY_HPP
