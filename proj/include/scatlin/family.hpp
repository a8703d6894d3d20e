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

#ifndef SCATLIN_FAMILY_HPP
#define SCATLIN_FAMILY_HPP

#include <algorithm>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parallel.hpp"
#include "qpoly.hpp"

namespace scatlin {

enum class FamilyTag {
    new_fh,         ///< h^{q-1}x^q - h^{q^2-1}x^{q^2} + x^{q^4} + x^{q^5}
    case1,          ///< x^q - x^{q^2} + x^{q^4} + x^{q^5}, the h-free form for h in F_q
    pseudoregulus,  ///< x^q
    lp,             ///< delta x^q + x^{q^5}
    csajbok_mp,     ///< x^q + delta x^{q^4}
    csajbok_mz,     ///< x^q + x^{q^3} + delta x^{q^5}
    trinomial,      ///< (h^{-1}-1)x^q + x^{q^3} + (h-1)x^{q^5}
};

constexpr std::string_view to_string(FamilyTag t) noexcept {
    switch (t) {
        case FamilyTag::new_fh: return "new_fh";
        case FamilyTag::case1: return "case1";
        case FamilyTag::pseudoregulus: return "pseudoregulus";
        case FamilyTag::lp: return "lp";
        case FamilyTag::csajbok_mp: return "csajbok_mp";
        case FamilyTag::csajbok_mz: return "csajbok_mz";
        case FamilyTag::trinomial: return "trinomial";
    }
    return "?";
}

inline std::optional<FamilyTag> family_from_string(std::string_view s) {
    for (auto t : {FamilyTag::new_fh, FamilyTag::case1, FamilyTag::pseudoregulus, FamilyTag::lp,
                   FamilyTag::csajbok_mp, FamilyTag::csajbok_mz, FamilyTag::trinomial})
        if (to_string(t) == s) return t;
    return std::nullopt;
}

constexpr bool family_takes_parameter(FamilyTag t) noexcept {
    return t != FamilyTag::pseudoregulus && t != FamilyTag::case1;
}

struct FamilySpec {
    FamilyTag tag = FamilyTag::pseudoregulus;
    /// h for new_fh / trinomial, delta for lp / csajbok_mp / csajbok_mz.
    std::optional<Elem> param;
};

enum class HVariant { odd, even };

// ---- small helpers on raw elements ----

namespace detail {

inline Elem norm_q3_plus_1(const Field& F, Elem h) { return F.mul(h, F.frob(h, 3)); }

inline u64 qpow(const Field& F, unsigned k) {
    u64 r = 1;
    for (unsigned i = 0; i < k; ++i) r *= F.q();
    return r;
}

}  // namespace detail

/// Why a parameter is not admissible for the family, or nullopt when it is.
inline std::optional<std::string> check_parameter(const Field& F, const FamilySpec& spec) {
    if (!family_takes_parameter(spec.tag)) return std::nullopt;
    if (!spec.param) return std::string(to_string(spec.tag)) + " needs a parameter";
    const Elem t = *spec.param;
    const Elem one = F.one(), zero = F.zero();
    switch (spec.tag) {
        case FamilyTag::new_fh: {
            if (F.is_zero(t)) return "h must be nonzero";
            const Elem n = detail::norm_q3_plus_1(F, t);
            if (F.odd() && n != F.neg(one)) return "h^(q^3+1) != -1";
            if (!F.odd() && n != one) return "h^(q^3+1) != 1";
            return std::nullopt;
        }
        case FamilyTag::lp: {
            const Elem n = F.norm(t, 1);
            if (n == zero || n == one) return "N_{q^6/q}(delta) must avoid {0,1}";
            return std::nullopt;
        }
        case FamilyTag::csajbok_mp: {
            const Elem n = F.norm(t, 3);
            if (n == zero || n == one) return "N_{q^6/q^3}(delta) must avoid {0,1}";
            return std::nullopt;
        }
        case FamilyTag::csajbok_mz: {
            if (!F.odd()) return "q must be odd";
            if (F.add(F.mul(t, t), t) != one) return "delta^2 + delta != 1";
            return std::nullopt;
        }
        case FamilyTag::trinomial: {
            if (!F.in_subfield(t, 2)) return "h must lie in F_{q^2}";
            if (F.mul(t, F.frob(t, 1)) != F.neg(one)) return "h^(q+1) != -1";
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

/// The coefficient vector of the family member; raises InvalidParameter with
/// the failed condition when the parameter is not admissible.
inline QPoly build(const FieldPtr& Fp, const FamilySpec& spec) {
    const Field& F = *Fp;
    if (auto why = check_parameter(F, spec)) throw Error(ErrorKind::InvalidParameter, *why);
    const Elem one = F.one();
    QPoly f(Fp);
    switch (spec.tag) {
        case FamilyTag::new_fh: {
            const Elem h = *spec.param;
            const u64 q = F.q();
            f.set(1, F.pow(h, q - 1));
            f.set(2, F.neg(F.pow(h, q * q - 1)));
            f.set(4, one);
            f.set(5, one);
            break;
        }
        case FamilyTag::case1:
            f.set(1, one);
            f.set(2, F.neg(one));
            f.set(4, one);
            f.set(5, one);
            break;
        case FamilyTag::pseudoregulus: f.set(1, one); break;
        case FamilyTag::lp:
            f.set(1, *spec.param);
            f.set(5, one);
            break;
        case FamilyTag::csajbok_mp:
            f.set(1, one);
            f.set(4, *spec.param);
            break;
        case FamilyTag::csajbok_mz:
            f.set(1, one);
            f.set(3, one);
            f.set(5, *spec.param);
            break;
        case FamilyTag::trinomial: {
            const Elem h = *spec.param;
            f.set(1, F.sub(F.inv(h), one));
            f.set(3, one);
            f.set(5, F.sub(h, one));
            break;
        }
    }
    return f;
}

/// csajbok_mp members are only known scattered under further conditions on
/// delta and q; they carry this status until a scatteredness check passes.
constexpr std::string_view baseline_status(FamilyTag t) noexcept {
    return t == FamilyTag::csajbok_mp ? "unverified-baseline" : "known";
}

/// All h with h^{q^3+1} = -1 (odd) or = 1 (even), in enumeration order.
/// Solved on exponents: (q^3+1) j = (q^6-1)/2 resp. 0 modulo q^6-1.
inline std::vector<Elem> enumerate_h(const Field& F, HVariant variant) {
    if ((variant == HVariant::odd) != F.odd())
        throw Error(ErrorKind::ParityMismatch, "variant does not match the parity of q");
    const u64 q3 = detail::qpow(F, 3);
    const u64 base = variant == HVariant::odd ? (q3 - 1) / 2 : 0;
    const Elem target = variant == HVariant::odd ? F.neg(F.one()) : F.one();
    std::vector<Elem> out;
    out.reserve(q3 + 1);
    for (u64 t = 0; t <= q3; ++t) {
        const Elem h = F.pow(F.gen(), base + t * (q3 - 1));
        if (detail::norm_q3_plus_1(F, h) != target)
            throw Error(ErrorKind::InvalidParameter, "congruence solution failed validation");
        out.push_back(h);
    }
    return out;
}

inline HVariant natural_variant(const Field& F) { return F.odd() ? HVariant::odd : HVariant::even; }

/// Roots of delta^2 + delta = 1 (both lie in F_{q^2}).
inline std::vector<Elem> mz_deltas(const Field& F) {
    std::vector<Elem> out;
    for (Elem d : F.enumerate_subfield(2))
        if (F.add(F.mul(d, d), d) == F.one()) out.push_back(d);
    std::sort(out.begin(), out.end(), [&](Elem a, Elem b) { return F.index_of(a) < F.index_of(b); });
    return out;
}

/// The first delta (in enumeration order) for every norm value N_{q^6/q^m}(delta)
/// outside {0, 1}: one representative per norm class.
inline std::vector<Elem> deltas_per_norm_class(const Field& F, unsigned m) {
    const u64 classes = detail::qpow(F, m) - 2;
    std::vector<Elem> out;
    std::vector<Elem> seen;
    const Elem zero = F.zero(), one = F.one();
    F.for_each(0, F.size(), [&](u64, Elem d) {
        if (out.size() == classes) return;
        const Elem n = F.norm(d, m);
        if (n == zero || n == one) return;
        if (std::find(seen.begin(), seen.end(), n) != seen.end()) return;
        seen.push_back(n);
        out.push_back(d);
    });
    return out;
}

// ---- auxiliary root classifications ----

/// h^{4q^2+4} + 14 h^{2q^2+2q+2} + h^{4q}, with no hypotheses on h.
inline Elem lemma1_item4_lhs(const Field& F, Elem h) {
    const u64 q = F.q();
    return F.add(F.add(F.pow(h, 4 * q * q + 4), F.mul(F.from_int(14), F.pow(h, 2 * q * q + 2 * q + 2))),
                 F.pow(h, 4 * q));
}

struct Lemma1Record {
    bool item1 = false;  ///< h^q != -h
    bool item2 = false;  ///< h^{q^2+1} != 1
    std::optional<bool> item3;  ///< h^{q^2+1} != +-h^q (q odd only)
    bool item4_lhs_zero = false;
    /// "none" when the item-4 equation fails, else "char2" or "q_square_power_of_3"
    /// per the value of h^{q^2-q+1}, or "unclassified".
    std::string item4_class = "none";
    bool item4_consistent = true;
};

namespace detail {

inline bool q_is_even_power_of_3(const Field& F) { return F.p() == 3 && F.s() % 2 == 0; }

inline void require_h(const Field& F, Elem h, bool want_h4_one) {
    if (detail::norm_q3_plus_1(F, h) != F.neg(F.one()))
        throw Error(ErrorKind::HypothesisViolated, "h^(q^3+1) != -1");
    const bool h4_one = F.pow(h, 4) == F.one();
    if (h4_one != want_h4_one)
        throw Error(ErrorKind::HypothesisViolated, want_h4_one ? "h^4 != 1" : "h^4 == 1");
}

}  // namespace detail

/// Direct evaluation of the four conditions on h (requires h^{q^3+1} = -1, h^4 != 1).
inline Lemma1Record lemma1_checks(const Field& F, Elem h) {
    detail::require_h(F, h, false);
    const u64 q = F.q();
    const Elem hq = F.frob(h, 1);
    const Elem hq2_1 = F.pow(h, q * q + 1);
    Lemma1Record r;
    r.item1 = hq != F.neg(h);
    r.item2 = hq2_1 != F.one();
    if (F.odd()) r.item3 = hq2_1 != hq && hq2_1 != F.neg(hq);
    r.item4_lhs_zero = F.is_zero(lemma1_item4_lhs(F, h));
    if (r.item4_lhs_zero) {
        const Elem t = F.pow(h, q * q - q + 1);
        if (F.p() == 2 && t == F.one()) {
            r.item4_class = "char2";
        } else if (detail::q_is_even_power_of_3(F) && F.mul(t, t) == F.neg(F.one())) {
            r.item4_class = "q_square_power_of_3";
        } else {
            r.item4_class = "unclassified";
            r.item4_consistent = false;
        }
    }
    return r;
}

enum class LemmaWhich { lemma2, lemma3 };

enum class RootClass { plus_minus, h_in_fq, char2, q_square_power_of_3 };

constexpr std::string_view to_string(RootClass c) noexcept {
    switch (c) {
        case RootClass::plus_minus: return "plus_minus";
        case RootClass::h_in_fq: return "h_in_Fq";
        case RootClass::char2: return "char2";
        case RootClass::q_square_power_of_3: return "q_square_power_of_3";
    }
    return "?";
}

struct LemmaRoot {
    Elem sigma;
    RootClass cls;
};

/// Every root in F_{q^6} of the auxiliary T-polynomial, each matched against
/// the alternatives the classification allows. A root matching none raises
/// ClassificationGap.
inline std::vector<LemmaRoot> lemma_roots(const Field& F, Elem h, LemmaWhich which, unsigned workers = 1) {
    const u64 q = F.q();
    detail::require_h(F, h, which == LemmaWhich::lemma3);
    auto P = [&](u64 e) { return F.pow(h, e); };
    const Elem pm = F.add(F.frob(h, 2), F.frob(h, 1));
    const Elem pm_neg = F.neg(pm);

    Elem c_q1 = P(q + 1), c_q{}, c_1{}, c_0{};
    Elem c_lem3 = F.pow(F.add(F.frob(h, 1), h), q + 1);
    if (which == LemmaWhich::lemma2) {
        c_q = F.add(P(q * q + q + 2), P(2 * q * q + 2));
        c_1 = F.sub(P(2 * q * q + 2), P(q * q + 1));
        c_0 = F.sub(F.add(P(q * q + 2 * q + 1), P(2 * q * q + q + 1)), F.add(P(2 * q), P(q * q + q)));
    }
    auto value = [&](Elem t) {
        if (which == LemmaWhich::lemma2) {
            const Elem tq = F.frob(t, 1);
            return F.add(F.add(F.mul(c_q1, F.mul(t, tq)), F.mul(c_q, tq)), F.add(F.mul(c_1, t), c_0));
        }
        return F.add(F.mul(c_q1, F.mul(t, F.frob(t, 2))), c_lem3);
    };

    std::mutex mu;
    std::vector<u64> hits;
    parallel_chunks(F.size(), 1 << 12, workers, [&](u64 lo, u64 hi) {
        std::vector<u64> local;
        F.for_each(lo, hi, [&](u64 idx, Elem t) {
            if (F.is_zero(value(t))) local.push_back(idx);
        });
        std::lock_guard lk(mu);
        hits.insert(hits.end(), local.begin(), local.end());
    });
    std::sort(hits.begin(), hits.end());

    const Elem t_exc = F.pow(h, q * q - q + 1);
    std::vector<LemmaRoot> out;
    for (u64 idx : hits) {
        const Elem s = F.at(idx);
        std::optional<RootClass> cls;
        if (s == pm || s == pm_neg) {
            cls = RootClass::plus_minus;
        } else if (which == LemmaWhich::lemma2) {
            if (F.in_subfield(h, 1)) cls = RootClass::h_in_fq;
            else if (F.p() == 2 && t_exc == F.one()) cls = RootClass::char2;
            else if (detail::q_is_even_power_of_3(F) && F.mul(t_exc, t_exc) == F.neg(F.one()))
                cls = RootClass::q_square_power_of_3;
        }
        if (!cls) throw Error(ErrorKind::ClassificationGap, "root " + F.format(s) + " matches no listed case");
        out.push_back({s, *cls});
    }
    return out;
}

}  // namespace scatlin

#endif  // SCATLIN_FAMILY_HPP
