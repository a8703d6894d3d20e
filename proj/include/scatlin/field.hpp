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

#ifndef SCATLIN_FIELD_HPP
#define SCATLIN_FIELD_HPP

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "numtheory.hpp"

namespace scatlin {

using u64 = std::uint64_t;

/// Plain field element. The meaning of `v` depends on the owning Field:
/// in Zech mode it is the discrete logarithm k of g^k (the group order
/// N = q^6 - 1 encodes zero); in polynomial mode it is the coefficient vector
/// over F_p packed as base-p digits (digit i is the coefficient of x^i).
struct Elem {
    u64 v = 0;
    friend bool operator==(Elem, Elem) = default;
    friend auto operator<=>(Elem, Elem) = default;
};

enum class Rep { zech, poly };

struct FieldOptions {
    /// Zech tables are built when p^{6s} does not exceed this bound.
    u64 zech_limit = u64{1} << 24;
    std::optional<Rep> force;
};

namespace detail {

inline constexpr unsigned kMaxDegree = 64;
using Digits = std::array<u64, kMaxDegree>;

// Arithmetic in F_p[x]/(f) for a monic f of degree n, elements as digit arrays.
struct PolyRing {
    u64 p = 2;
    unsigned n = 1;
    std::vector<u64> f;  // f[0..n], f[n] == 1

    Digits zero() const { return Digits{}; }
    Digits one() const {
        Digits d{};
        d[0] = 1;
        return d;
    }
    Digits x() const {
        Digits d{};
        if (n == 1) {
            d[0] = (p - f[0]) % p;
        } else {
            d[1] = 1;
        }
        return d;
    }

    Digits add(const Digits& a, const Digits& b) const {
        Digits r{};
        for (unsigned i = 0; i < n; ++i) {
            u64 s = a[i] + b[i];
            r[i] = s >= p ? s - p : s;
        }
        return r;
    }

    Digits mul(const Digits& a, const Digits& b) const {
        std::array<u64, 2 * kMaxDegree> prod{};
        for (unsigned i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
            // keep partial sums small for large p
            if ((i & 7) == 7)
                for (unsigned k = 0; k < 2 * n; ++k) prod[k] %= p;
        }
        for (unsigned k = 0; k < 2 * n; ++k) prod[k] %= p;
        for (unsigned i = 2 * n - 2; i >= n; --i) {
            u64 c = prod[i];
            if (c != 0) {
                prod[i] = 0;
                for (unsigned j = 0; j < n; ++j) {
                    if (f[j] == 0) continue;
                    prod[i - n + j] = (prod[i - n + j] + c * (p - f[j])) % p;
                }
            }
            if (i == n) break;
        }
        Digits r{};
        for (unsigned i = 0; i < n; ++i) r[i] = prod[i];
        return r;
    }

    Digits pow(Digits b, u64 e) const {
        Digits r = one();
        while (e) {
            if (e & 1) r = mul(r, b);
            e >>= 1;
            if (e) b = mul(b, b);
        }
        return r;
    }

    bool is_one(const Digits& a) const {
        if (a[0] != 1) return false;
        for (unsigned i = 1; i < n; ++i)
            if (a[i]) return false;
        return true;
    }
};

// Plain polynomials over F_p (coefficient vectors, low degree first) for gcds.
inline void trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<u64> poly_mod(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const u64 inv_lead = nt::powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        const u64 c = nt::mulmod(a.back(), inv_lead, p);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + (p - nt::mulmod(c, b[j], p))) % p;
        trim(a);
    }
    return a;
}

inline std::vector<u64> poly_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Irreducibility of a monic f of degree n over F_p: f | x^{p^n} - x and
// gcd(x^{p^k} - x, f) = 1 for every proper divisor k of n.
inline bool is_irreducible(const PolyRing& R) {
    const unsigned n = R.n;
    if (R.f[0] == 0) return false;
    Digits xp = R.x();
    const Digits xx = R.x();
    for (unsigned k = 1; k <= n; ++k) {
        xp = R.pow(xp, R.p);
        if (k == n) {
            for (unsigned i = 0; i < n; ++i)
                if (xp[i] != xx[i]) return false;
            return true;
        }
        if (n % k != 0) continue;
        std::vector<u64> h(xp.begin(), xp.begin() + n);
        if (n > 1) h[1] = (h[1] + R.p - 1) % R.p;
        trim(h);
        if (h.empty()) return false;
        auto g = poly_gcd(R.f, h, R.p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The field F_{p^{6s}} with q = p^s, its subfield tower, Frobenius maps and
/// a deterministic element order (0 first, then g^0, g^1, ...).
/// Immutable after construction; safe to share across threads.
class Field {
public:
    static FieldPtr make(u64 p, unsigned s, FieldOptions opts = {}) {
        return FieldPtr(new Field(p, s, opts));
    }

    u64 p() const noexcept { return p_; }
    unsigned s() const noexcept { return s_; }
    u64 q() const noexcept { return q_; }
    /// Extension degree 6s over F_p.
    unsigned degree() const noexcept { return n_; }
    /// q^6.
    u64 size() const noexcept { return size_; }
    /// q^6 - 1, the order of the multiplicative group.
    u64 order() const noexcept { return N_; }
    Rep rep() const noexcept { return rep_; }
    bool odd() const noexcept { return p_ != 2; }
    const std::vector<u64>& modulus() const noexcept { return ring_.f; }
    const std::vector<std::pair<u64, unsigned>>& order_factors() const noexcept { return factors_; }
    /// Packed coefficient digits of the primitive element.
    u64 generator_packed() const noexcept { return gen_packed_; }

    Elem zero() const noexcept { return rep_ == Rep::zech ? Elem{N_} : Elem{0}; }
    Elem one() const noexcept { return rep_ == Rep::zech ? Elem{0} : Elem{1}; }
    Elem gen() const noexcept { return rep_ == Rep::zech ? Elem{1 % N_} : Elem{gen_packed_}; }
    bool is_zero(Elem a) const noexcept { return a == zero(); }

    Elem from_int(long long v) const {
        long long m = static_cast<long long>(p_);
        long long r = ((v % m) + m) % m;
        return from_packed(static_cast<u64>(r));
    }

    // ---- arithmetic ----

    Elem add(Elem a, Elem b) const {
        if (rep_ == Rep::zech) {
            if (a.v == N_) return b;
            if (b.v == N_) return a;
            const u64 d = b.v >= a.v ? b.v - a.v : b.v + N_ - a.v;
            const u64 z = zech_[d];
            if (z == N_) return Elem{N_};
            u64 r = a.v + z;
            return Elem{r >= N_ ? r - N_ : r};
        }
        if (p_ == 2) return Elem{a.v ^ b.v};
        return pack(ring_.add(unpack(a.v), unpack(b.v)));
    }

    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        if (rep_ == Rep::zech) {
            if (a.v == N_) return a;
            u64 r = a.v + N_ / 2;
            return Elem{r >= N_ ? r - N_ : r};
        }
        auto d = unpack(a.v);
        for (unsigned i = 0; i < n_; ++i) d[i] = d[i] ? p_ - d[i] : 0;
        return pack(d);
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (rep_ == Rep::zech) {
            if (a.v == N_ || b.v == N_) return Elem{N_};
            u64 r = a.v + b.v;
            return Elem{r >= N_ ? r - N_ : r};
        }
        if (a.v == 0 || b.v == 0) return Elem{0};
        return pack(ring_.mul(unpack(a.v), unpack(b.v)));
    }

    Elem inv(Elem a) const {
        if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        if (rep_ == Rep::zech) return Elem{a.v == 0 ? 0 : N_ - a.v};
        return pow(a, N_ - 1);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// a^e; exponents are reduced modulo q^6 - 1 for nonzero a, 0^0 = 1.
    Elem pow(Elem a, u64 e) const {
        if (is_zero(a)) return e == 0 ? one() : zero();
        e %= N_;
        if (rep_ == Rep::zech) return Elem{nt::mulmod(a.v, e, N_)};
        return pack(ring_.pow(unpack(a.v), e));
    }

    /// a^e for a signed exponent.
    Elem pow_signed(Elem a, long long e) const {
        if (e >= 0) return pow(a, static_cast<u64>(e));
        return inv(pow(a, static_cast<u64>(-(e + 1)) + 1));
    }

    /// x^{p^e}, e taken modulo 6s.
    Elem frob_p(Elem a, long long e) const {
        const long long n = static_cast<long long>(n_);
        const unsigned k = static_cast<unsigned>(((e % n) + n) % n);
        if (k == 0) return a;
        if (rep_ == Rep::zech) {
            if (a.v == N_) return a;
            return Elem{nt::mulmod(a.v, pe_mod_[k], N_)};
        }
        if (a.v == 0) return a;
        const auto d = unpack(a.v);
        detail::Digits r{};
        for (unsigned j = 0; j < n_; ++j) {
            if (d[j] == 0) continue;
            const auto& col = frob_img_[k * n_ + j];
            for (unsigned i = 0; i < n_; ++i) r[i] = (r[i] + d[j] * col[i]) % p_;
        }
        return pack(r);
    }

    /// x^{q^i}, i taken modulo 6.
    Elem frob(Elem a, long long i) const { return frob_p(a, static_cast<long long>(s_) * (((i % 6) + 6) % 6)); }

    // ---- subfields ----

    static bool divides_six(unsigned m) noexcept { return m == 1 || m == 2 || m == 3 || m == 6; }

    bool in_subfield(Elem x, unsigned m) const {
        check_subfield(m);
        return frob(x, m) == x;
    }

    /// Product of the 6/m conjugates x^{q^{mj}}; lies in F_{q^m}.
    Elem norm(Elem x, unsigned m) const {
        check_subfield(m);
        Elem r = one();
        for (unsigned j = 0; j < 6 / m; ++j) r = mul(r, frob(x, m * j));
        return r;
    }

    /// Sum of the 6/m conjugates x^{q^{mj}}; lies in F_{q^m}.
    Elem trace(Elem x, unsigned m) const {
        check_subfield(m);
        Elem r = zero();
        for (unsigned j = 0; j < 6 / m; ++j) r = add(r, frob(x, m * j));
        return r;
    }

    /// The q^m elements of F_{q^m}: 0, then powers of g^{(q^6-1)/(q^m-1)}.
    std::vector<Elem> enumerate_subfield(unsigned m) const {
        check_subfield(m);
        u64 qm = 1;
        for (unsigned i = 0; i < m; ++i) qm *= q_;
        const u64 step = N_ / (qm - 1);
        std::vector<Elem> out;
        out.reserve(qm);
        out.push_back(zero());
        const Elem gm = pow(gen(), step);
        Elem cur = one();
        for (u64 i = 0; i + 1 < qm; ++i) {
            out.push_back(cur);
            cur = mul(cur, gm);
        }
        return out;
    }

    // ---- enumeration ----

    /// Element number `index` in the fixed order: 0, g^0, g^1, ..., g^{N-1}.
    Elem at(u64 index) const {
        if (index == 0) return zero();
        if (rep_ == Rep::zech) return Elem{index - 1};
        return pow(gen(), index - 1);
    }

    /// Calls fn(index, element) for indices in [lo, hi) of the fixed order.
    template <class Fn>
    void for_each(u64 lo, u64 hi, Fn&& fn) const {
        if (lo >= hi) return;
        u64 i = lo;
        if (i == 0) {
            fn(u64{0}, zero());
            ++i;
        }
        if (rep_ == Rep::zech) {
            for (; i < hi; ++i) fn(i, Elem{i - 1});
            return;
        }
        Elem cur = pow(gen(), i - 1);
        const Elem g = gen();
        for (; i < hi; ++i) {
            fn(i, cur);
            cur = mul(cur, g);
        }
    }

    /// Dense bijection of the field onto [0, q^6). Equals the enumeration
    /// index in Zech mode and the packed coefficient value in poly mode.
    u64 slot(Elem a) const noexcept {
        if (rep_ == Rep::zech) return a.v == N_ ? 0 : a.v + 1;
        return a.v;
    }
    Elem from_slot(u64 s) const noexcept {
        if (rep_ == Rep::zech) return s == 0 ? Elem{N_} : Elem{s - 1};
        return Elem{s};
    }

    /// Enumeration index of a (inverse of at()).
    u64 index_of(Elem a) const {
        if (is_zero(a)) return 0;
        return log(a) + 1;
    }

    /// Discrete logarithm to base g (Pohlig-Hellman in poly mode).
    u64 log(Elem a) const {
        if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "log of zero");
        if (rep_ == Rep::zech) return a.v;
        return pohlig_hellman(a);
    }

    // ---- representation conversion ----

    u64 to_packed(Elem a) const {
        if (rep_ == Rep::zech) return a.v == N_ ? 0 : antilog_[a.v];
        return a.v;
    }
    Elem from_packed(u64 packed) const {
        if (rep_ == Rep::zech) return Elem{log_[packed]};
        return Elem{packed};
    }
    std::vector<u64> coeffs(Elem a) const {
        auto d = unpack(to_packed(a));
        return {d.begin(), d.begin() + n_};
    }
    /// Same element expressed in another context over the same p^s.
    Elem convert_from(const Field& other, Elem a) const {
        if (other.p_ != p_ || other.s_ != s_ || other.ring_.f != ring_.f || other.gen_packed_ != gen_packed_)
            throw Error(ErrorKind::CtxMismatch, "fields differ");
        return from_packed(other.to_packed(a));
    }

    /// "0" or "g^k".
    std::string format(Elem a) const {
        if (is_zero(a)) return "0";
        return "g^" + std::to_string(log(a));
    }

    /// Accepts "0", "g^k" (k may be negative), "g" and integer literals
    /// (embedded via the prime field).
    Elem parse(const std::string& text) const {
        std::string t;
        for (char c : text)
            if (c != ' ') t.push_back(c);
        if (t.empty()) throw Error(ErrorKind::ParseError, "empty element literal");
        try {
            std::size_t used = 0;
            if (t == "g") return gen();
            if (t.rfind("g^", 0) == 0) {
                const std::string ex = t.substr(2);
                long long k = std::stoll(ex, &used);
                if (used != ex.size()) throw Error(ErrorKind::ParseError, "bad exponent in '" + text + "'");
                return pow_signed(gen(), k);
            }
            if (t.rfind("-g^", 0) == 0) return neg(parse(t.substr(1)));
            long long v = std::stoll(t, &used);
            if (used != t.size()) throw Error(ErrorKind::ParseError, "bad element literal '" + text + "'");
            return from_int(v);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::ParseError, "bad element literal '" + text + "'");
        }
    }

private:
    Field(u64 p, unsigned s, FieldOptions opts) : p_(p), s_(s) {
        if (!nt::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
        if (s == 0) throw Error(ErrorKind::InvalidParameter, "s must be positive");
        n_ = 6 * s;
        if (n_ > detail::kMaxDegree) throw Error(ErrorKind::TooLarge, "6s exceeds 64");
        auto sz = nt::checked_pow(p, n_);
        if (!sz || *sz >= (u64{1} << 63)) throw Error(ErrorKind::TooLarge, "p^(6s) does not fit the packed representation");
        size_ = *sz;
        N_ = size_ - 1;
        q_ = *nt::checked_pow(p, s);
        for (unsigned i = 0; i < n_; ++i) ppow_[i] = *nt::checked_pow(p, i);
        factors_ = nt::factor(N_);
        ring_.p = p;
        ring_.n = n_;
        find_modulus();
        find_generator();
        pe_mod_.resize(n_);
        for (unsigned e = 0; e < n_; ++e) pe_mod_[e] = nt::powmod(p, e, N_);
        build_frobenius();
        rep_ = opts.force.value_or(size_ <= opts.zech_limit ? Rep::zech : Rep::poly);
        if (rep_ == Rep::zech) {
            if (size_ > (u64{1} << 32)) throw Error(ErrorKind::TooLarge, "Zech tables limited to 2^32 elements");
            build_tables();
        }
    }

    void check_subfield(unsigned m) const {
        if (!divides_six(m)) throw Error(ErrorKind::BadSubfield, std::to_string(m) + " does not divide 6");
    }

    detail::Digits unpack(u64 v) const {
        detail::Digits d{};
        if (p_ == 2) {
            for (unsigned i = 0; i < n_; ++i) d[i] = (v >> i) & 1;
            return d;
        }
        for (unsigned i = 0; i < n_ && v; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    }
    Elem pack(const detail::Digits& d) const {
        u64 v = 0;
        for (unsigned i = 0; i < n_; ++i) v += d[i] * ppow_[i];
        return Elem{v};
    }

    void find_modulus() {
        // monic x^n + sum c_i x^i, candidates ordered by the integer sum c_i p^i
        for (u64 t = 1; t < size_; ++t) {
            if (t % p_ == 0) continue;  // constant term must be nonzero
            ring_.f.assign(n_ + 1, 0);
            u64 v = t;
            for (unsigned i = 0; i < n_; ++i) {
                ring_.f[i] = v % p_;
                v /= p_;
            }
            ring_.f[n_] = 1;
            if (detail::is_irreducible(ring_)) return;
        }
        throw Error(ErrorKind::NoIrreducibleFound, "no irreducible modulus found");
    }

    bool has_full_order(const detail::Digits& g) const {
        for (const auto& [r, e] : factors_) {
            (void)e;
            if (ring_.is_one(ring_.pow(g, N_ / r))) return false;
        }
        return true;
    }

    void find_generator() {
        for (u64 c = p_; c < size_; ++c) {
            auto d = unpack(c);
            if (has_full_order(d)) {
                gen_packed_ = c;
                return;
            }
        }
        throw Error(ErrorKind::NoIrreducibleFound, "no primitive element found");
    }

    void build_frobenius() {
        // frob_img_[e*n + j] = digits of (x^j)^{p^e}
        frob_img_.assign(static_cast<std::size_t>(n_) * n_, detail::Digits{});
        for (unsigned j = 0; j < n_; ++j) {
            detail::Digits xj{};
            xj[j] = 1;
            detail::Digits cur = xj;
            for (unsigned e = 0; e < n_; ++e) {
                frob_img_[e * n_ + j] = cur;
                cur = ring_.pow(cur, p_);
            }
        }
    }

    void build_tables() {
        antilog_.assign(N_, 0);
        log_.assign(size_, 0);
        const auto g = unpack(gen_packed_);
        detail::Digits cur = ring_.one();
        const bool gen_is_x = gen_packed_ == p_;
        for (u64 k = 0; k < N_; ++k) {
            const u64 packed = pack(cur).v;
            antilog_[k] = static_cast<std::uint32_t>(packed);
            log_[packed] = static_cast<std::uint32_t>(k);
            if (gen_is_x) {
                const u64 top = cur[n_ - 1];
                for (unsigned i = n_ - 1; i > 0; --i) cur[i] = cur[i - 1];
                cur[0] = 0;
                if (top)
                    for (unsigned i = 0; i < n_; ++i) cur[i] = (cur[i] + top * (p_ - ring_.f[i])) % p_;
            } else {
                cur = ring_.mul(cur, g);
            }
        }
        log_[0] = static_cast<std::uint32_t>(N_);
        zech_.assign(N_, 0);
        for (u64 k = 0; k < N_; ++k) {
            u64 packed = antilog_[k];
            const u64 c0 = packed % p_;
            packed = packed - c0 + (c0 + 1) % p_;
            zech_[k] = log_[packed];
        }
    }

    u64 pohlig_hellman(Elem a) const {
        // CRT over prime-power factors of N
        u64 result = 0, modulus = 1;
        for (const auto& [r, e] : factors_) {
            u64 re = 1;
            for (unsigned i = 0; i < e; ++i) re *= r;
            const u64 cof = N_ / re;
            const Elem gr = pow(gen(), cof);  // order r^e
            const Elem ar = pow(a, cof);
            const Elem gamma = pow(gr, re / r);  // order r
            u64 x = 0, rk = 1;
            for (unsigned k = 0; k < e; ++k) {
                // (ar * gr^{-x})^{r^{e-1-k}} = gamma^{d}
                const Elem t = pow(mul(ar, inv(pow(gr, x))), re / r / rk);
                const u64 d = bsgs(gamma, t, r);
                x += d * rk;
                rk *= r;
            }
            // combine x mod re into result mod modulus
            const u64 newmod = modulus * re;
            u64 tcoef = nt::mulmod((x + re - result % re) % re, nt::powmod(modulus % re, phi_pp(r, e) - 1, re), re);
            result = result + static_cast<u64>(static_cast<unsigned __int128>(tcoef) * modulus % newmod);
            result %= newmod;
            modulus = newmod;
        }
        return result;
    }

    static u64 phi_pp(u64 r, unsigned e) {
        u64 v = r - 1;
        for (unsigned i = 1; i < e; ++i) v *= r;
        return v;
    }

    u64 bsgs(Elem base, Elem target, u64 ord) const {
        const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(ord)))) + 1;
        if (m > (u64{1} << 23)) throw Error(ErrorKind::TooLarge, "discrete log factor too large");
        std::unordered_map<u64, u64> baby;
        baby.reserve(m * 2);
        Elem cur = one();
        for (u64 j = 0; j < m; ++j) {
            baby.emplace(cur.v, j);
            cur = mul(cur, base);
        }
        const Elem giant = inv(pow(base, m));
        Elem y = target;
        for (u64 i = 0; i <= m; ++i) {
            auto it = baby.find(y.v);
            if (it != baby.end()) return (i * m + it->second) % ord;
            y = mul(y, giant);
        }
        throw Error(ErrorKind::InvalidParameter, "discrete log not found");
    }

    u64 p_;
    unsigned s_;
    unsigned n_ = 0;
    u64 q_ = 0, size_ = 0, N_ = 0;
    std::array<u64, detail::kMaxDegree> ppow_{};
    std::vector<std::pair<u64, unsigned>> factors_;
    detail::PolyRing ring_;
    u64 gen_packed_ = 0;
    Rep rep_ = Rep::poly;
    std::vector<u64> pe_mod_;
    std::vector<detail::Digits> frob_img_;
    std::vector<std::uint32_t> antilog_, log_, zech_;
};

/// Element bound to its context; arithmetic across contexts raises CtxMismatch.
class FieldElem {
public:
    FieldElem(FieldPtr ctx, Elem e) : ctx_(std::move(ctx)), e_(e) {}

    const FieldPtr& ctx() const noexcept { return ctx_; }
    Elem raw() const noexcept { return e_; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) { return {a.same(b), a.ctx_->add(a.e_, b.e_)}; }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return {a.same(b), a.ctx_->sub(a.e_, b.e_)}; }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) { return {a.same(b), a.ctx_->mul(a.e_, b.e_)}; }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return {a.same(b), a.ctx_->div(a.e_, b.e_)}; }
    FieldElem operator-() const { return {ctx_, ctx_->neg(e_)}; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.same(b) && a.e_ == b.e_; }

    FieldElem inv() const { return {ctx_, ctx_->inv(e_)}; }
    FieldElem pow(long long e) const { return {ctx_, ctx_->pow_signed(e_, e)}; }
    FieldElem frob(long long i) const { return {ctx_, ctx_->frob(e_, i)}; }
    bool is_zero() const { return ctx_->is_zero(e_); }
    std::string str() const { return ctx_->format(e_); }

private:
    const FieldPtr& same(const FieldElem& o) const {
        if (ctx_.get() != o.ctx_.get()) throw Error(ErrorKind::CtxMismatch, "elements from different fields");
        return ctx_;
    }

    FieldPtr ctx_;
    Elem e_;
};

}  // namespace scatlin

#endif  // SCATLIN_FIELD_HPP
