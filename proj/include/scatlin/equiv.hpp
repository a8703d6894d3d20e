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

#ifndef SCATLIN_EQUIV_HPP
#define SCATLIN_EQUIV_HPP

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "family.hpp"
#include "parallel.hpp"
#include "qpoly.hpp"

namespace scatlin {

/// (x, y) -> (a x^rho + b y^rho, c x^rho + d y^rho) with rho = p^e-power.
struct EquivWitness {
    long long e = 0;
    Elem a{}, b{}, c{}, d{};
    friend bool operator==(const EquivWitness&, const EquivWitness&) = default;
};

enum class EquivKind { equivalent, not_equivalent, budget_exceeded };

constexpr std::string_view to_string(EquivKind k) noexcept {
    switch (k) {
        case EquivKind::equivalent: return "Equivalent";
        case EquivKind::not_equivalent: return "NotEquivalent";
        case EquivKind::budget_exceeded: return "BudgetExceeded";
    }
    return "?";
}

/// Search position. Rows are (rho, a) pairs numbered rho * q^6 + index(a);
/// each row holds the q^6 values of b in enumeration order.
struct EquivCursor {
    u64 next_row = 0;
    u64 searched = 0;
    friend bool operator==(const EquivCursor&, const EquivCursor&) = default;
};

struct EquivOptions {
    unsigned workers = 1;
    /// Triples this call may try; nullopt means no limit.
    std::optional<u64> budget;
    EquivCursor resume{};
};

struct EquivVerdict {
    EquivKind kind = EquivKind::not_equivalent;
    std::optional<EquivWitness> witness;
    EquivCursor cursor;  ///< where a resumed search would continue
    std::string branch = "direct";
};

inline bool is_degenerate(const QPoly& f) {
    for (std::size_t i = 1; i < 6; ++i)
        if (!f.field()->is_zero(f[i])) return false;
    return true;
}

/// Exact check of g o (a id + b f^rho) = c id + d f^rho with ad - bc != 0.
inline bool verify_witness(const QPoly& f, const QPoly& g, const EquivWitness& w) {
    f.require_same(g);
    const Field& F = *f.field();
    if (F.is_zero(F.sub(F.mul(w.a, w.d), F.mul(w.b, w.c)))) return false;
    const QPoly fr = apply_automorphism(f, w.e);
    QPoly inner = scale(w.b, fr);
    inner.set(0, F.add(inner[0], w.a));
    QPoly rhs = scale(w.d, fr);
    rhs.set(0, F.add(rhs[0], w.c));
    return compose(g, inner) == rhs;
}

/// Pointwise check: every (x, f(x)) lands in U_g and the images are pairwise
/// distinct. All x when the field has at most `full_limit` elements, else a
/// deterministic stride through the enumeration.
inline bool verify_witness_pointwise(const QPoly& f, const QPoly& g, const EquivWitness& w,
                                     u64 full_limit = u64{1} << 16) {
    f.require_same(g);
    const Field& F = *f.field();
    const u64 n = F.size();
    const u64 step = n <= full_limit ? 1 : n / 4099 + 1;
    std::unordered_set<u64> seen;
    for (u64 i = 0; i < n; i += step) {
        const Elem x = F.at(i);
        const Elem xr = F.frob_p(x, w.e), yr = F.frob_p(evaluate(f, x), w.e);
        const Elem u = F.add(F.mul(w.a, xr), F.mul(w.b, yr));
        const Elem v = F.add(F.mul(w.c, xr), F.mul(w.d, yr));
        if (evaluate(g, u) != v) return false;
        if (!seen.insert(u.v).second) return false;
    }
    return true;
}

/// Witness for the reverse direction: rho^{-1} and (A^{-1})^{rho^{-1}}.
inline EquivWitness invert_witness(const Field& F, const EquivWitness& w) {
    const long long n = 6LL * F.s();
    const long long e = ((-w.e) % n + n) % n;
    const Elem det = F.sub(F.mul(w.a, w.d), F.mul(w.b, w.c));
    if (F.is_zero(det)) throw Error(ErrorKind::DivisionByZero, "witness matrix is singular");
    const Elem di = F.inv(det);
    EquivWitness r;
    r.e = e;
    r.a = F.frob_p(F.mul(w.d, di), e);
    r.b = F.frob_p(F.neg(F.mul(w.b, di)), e);
    r.c = F.frob_p(F.neg(F.mul(w.c, di)), e);
    r.d = F.frob_p(F.mul(w.a, di), e);
    return r;
}

namespace detail {

using Coeff6 = std::array<Elem, 6>;

/// Per-automorphism data: f^rho and the table b -> coefficients of g o (b f^rho).
struct RhoTables {
    QPoly fr;
    std::vector<Coeff6> lb;
    std::size_t j = 0;  ///< first slot >= 1 where f^rho is nonzero
    Elem inv_frj{};

    RhoTables(const QPoly& f, const QPoly& g, long long e, unsigned workers) : fr(apply_automorphism(f, e)) {
        const Field& F = *f.field();
        for (std::size_t k = 1; k < 6; ++k)
            if (!F.is_zero(fr[k])) {
                j = k;
                break;
            }
        inv_frj = F.inv(fr[j]);
        lb.resize(F.size());
        parallel_chunks(F.size(), 1 << 12, workers, [&](u64 lo, u64 hi) {
            F.for_each(lo, hi, [&](u64 idx, Elem b) {
                Coeff6 c;
                c.fill(F.zero());
                for (int i = 0; i < 6; ++i) {
                    if (F.is_zero(g[static_cast<std::size_t>(i)])) continue;
                    for (int t = 0; t < 6; ++t) {
                        const Elem bt = F.mul(b, fr[static_cast<std::size_t>(t)]);
                        if (F.is_zero(bt)) continue;
                        auto& s = c[static_cast<std::size_t>((i + t) % 6)];
                        s = F.add(s, F.mul(g[static_cast<std::size_t>(i)], F.frob(bt, i)));
                    }
                }
                lb[idx] = c;
            });
        });
    }

    /// First b index completing (a, b) to a witness, scanning b in order.
    std::optional<std::pair<u64, EquivWitness>> scan_row(const Field& F, const QPoly& g, long long e, u64 a_idx) const {
        const Elem a = F.at(a_idx);
        Coeff6 la;
        for (std::size_t k = 0; k < 6; ++k) la[k] = F.mul(g[k], F.frob(a, static_cast<long long>(k)));
        std::optional<std::pair<u64, EquivWitness>> hit;
        const u64 n = F.size();
        for (u64 bi = (a_idx == 0 ? 1 : 0); bi < n; ++bi) {
            const Coeff6& lbv = lb[bi];
            const Elem d = F.mul(F.add(la[j], lbv[j]), inv_frj);
            bool ok = true;
            for (std::size_t k = 1; k < 6 && ok; ++k)
                if (k != j) ok = F.add(la[k], lbv[k]) == F.mul(d, fr[k]);
            if (!ok) continue;
            const Elem c = F.sub(F.add(la[0], lbv[0]), F.mul(d, fr[0]));
            const Elem b = F.at(bi);
            if (F.is_zero(F.sub(F.mul(a, d), F.mul(b, c)))) continue;
            return std::pair{bi, EquivWitness{e, a, b, c, d}};
        }
        return hit;
    }
};

}  // namespace detail

/// Exhaustive search over (rho, a, b) for a semilinear map taking U_f onto U_g;
/// (c, d) are solved from the coefficient identity. Deterministic: the witness
/// is the first hit in (rho, a, b) enumeration order for any worker count.
inline EquivVerdict gl_equivalent(const QPoly& f, const QPoly& g, const EquivOptions& opts = {}) {
    f.require_same(g);
    if (is_degenerate(f) || is_degenerate(g))
        throw Error(ErrorKind::DegenerateInput, "{x, f(x)} must span a rank-6 subspace that is not a single point");
    const Field& F = *f.field();
    const u64 n = F.size();
    const u64 rows_total = 6ULL * F.s() * n;
    EquivVerdict out;
    out.cursor = opts.resume;
    u64 row = opts.resume.next_row;
    u64 allowed_rows = rows_total;
    if (opts.budget) allowed_rows = *opts.budget / n;
    const u64 stop = row + std::min(allowed_rows, rows_total - std::min(row, rows_total));

    while (row < stop) {
        const long long e = static_cast<long long>(row / n);
        const u64 row_end = std::min(stop, static_cast<u64>(e + 1) * n);
        const detail::RhoTables tab(f, g, e, opts.workers);
        const u64 base = static_cast<u64>(e) * n;
        auto first = parallel_find_first(row_end - row, 8, opts.workers, [&](u64 lo, u64 hi) -> std::optional<u64> {
            for (u64 r = lo; r < hi; ++r)
                if (tab.scan_row(F, g, e, row - base + r)) return r;
            return std::nullopt;
        });
        if (first) {
            const u64 a_idx = row - base + *first;
            auto hit = tab.scan_row(F, g, e, a_idx);
            out.kind = EquivKind::equivalent;
            out.witness = hit->second;
            out.cursor.searched += *first * n + hit->first + 1;
            out.cursor.next_row = base + a_idx + 1;
            return out;
        }
        out.cursor.searched += (row_end - row) * n;
        row = row_end;
        out.cursor.next_row = row;
    }
    out.kind = row >= rows_total ? EquivKind::not_equivalent : EquivKind::budget_exceeded;
    return out;
}

/// PGammaL-equivalence of L_f and L_g through the reduction to subspaces: U_f
/// against U_g, then against the adjoint of g except for csajbok_mp.
inline EquivVerdict pgl_linear_sets_equivalent(const QPoly& f, const QPoly& g, FamilyTag g_family,
                                               const EquivOptions& opts = {}) {
    EquivVerdict v = gl_equivalent(f, g, opts);
    if (v.kind != EquivKind::not_equivalent || g_family == FamilyTag::csajbok_mp) return v;
    const u64 searched = v.cursor.searched;
    EquivOptions o2 = opts;
    o2.resume = {};
    if (o2.budget) o2.budget = *o2.budget > searched ? *o2.budget - searched : 0;
    EquivVerdict w = gl_equivalent(f, adjoint(g), o2);
    w.branch = "adjoint";
    w.cursor.searched += searched;
    return w;
}

enum class L4Variant { trin, trin2 };

/// x^q + x^{q^3} + delta x^{q^5} (trin) or delta x^q + x^{q^3} + x^{q^5} (trin2).
inline QPoly l4_target(const FieldPtr& Fp, Elem delta, L4Variant v) {
    QPoly g(Fp);
    g.set(1, v == L4Variant::trin ? Fp->one() : delta);
    g.set(3, Fp->one());
    g.set(5, v == L4Variant::trin ? delta : Fp->one());
    return g;
}

struct L4Result {
    bool found = false;
    std::optional<EquivWitness> witness;
    std::optional<Elem> k;  ///< h^rho for the witness automorphism
    u64 candidates = 0;     ///< (rho, b) pairs examined
};

/// Solves the coefficient system for U_h against the L4 target directly: for
/// each rho and b, (a, c, d) are read off three of the six equations and the
/// full identity is then checked. Theta(q^6) per automorphism.
inline L4Result check_system_L4(const FieldPtr& Fp, Elem h, Elem delta, L4Variant variant) {
    const Field& F = *Fp;
    if (F.add(F.mul(delta, delta), delta) != F.one())
        throw Error(ErrorKind::HypothesisViolated, "delta^2 + delta != 1");
    if (F.is_zero(h) || detail::norm_q3_plus_1(F, h) != F.neg(F.one()))
        throw Error(ErrorKind::HypothesisViolated, "h^(q^3+1) != -1");
    const QPoly fh = build(Fp, {FamilyTag::new_fh, h});
    const QPoly g = l4_target(Fp, delta, variant);
    const u64 q = F.q();
    const bool t1 = variant == L4Variant::trin;
    L4Result out;
    for (long long e = 0; e < 6LL * F.s(); ++e) {
        const Elem k = F.frob_p(h, e);
        const Elem k_q2_1 = F.pow(k, q * q + 1);
        const Elem k_1_q = F.pow_signed(k, 1 - static_cast<long long>(q));
        const Elem k_m_q_1 = F.pow_signed(k, -static_cast<long long>(q) - 1);
        for (u64 bi = 0; bi < F.size(); ++bi) {
            ++out.candidates;
            const Elem b = F.at(bi);
            const Elem bq = F.frob(b, 1), bq3 = F.frob(b, 3), bq5 = F.frob(b, 5);
            EquivWitness w;
            w.e = e;
            w.b = b;
            if (t1) {
                w.c = F.sub(bq, F.mul(delta, F.mul(k_q2_1, bq5)));
                w.d = F.add(F.mul(k_1_q, bq3), F.mul(delta, bq5));
                w.a = F.frob(F.neg(F.add(F.mul(k_m_q_1, bq), F.mul(delta, bq5))), 3);
            } else {
                w.c = F.sub(F.mul(delta, bq), F.mul(k_q2_1, bq5));
                w.d = F.add(F.mul(k_1_q, bq3), bq5);
                w.a = F.frob(F.neg(F.add(F.mul(delta, F.mul(k_m_q_1, bq)), bq5)), 3);
            }
            if (verify_witness(fh, g, w)) {
                out.found = true;
                out.witness = w;
                out.k = k;
                return out;
            }
        }
    }
    return out;
}

}  // namespace scatlin

#endif  // SCATLIN_EQUIV_HPP
