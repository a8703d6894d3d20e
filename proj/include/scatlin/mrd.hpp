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

#ifndef SCATLIN_MRD_HPP
#define SCATLIN_MRD_HPP

#include <map>
#include <mutex>
#include <random>

#include "equiv.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "qpoly.hpp"

namespace scatlin {

/// C_f = {x -> a f(x) + b x : a, b in F_{q^6}}, kept implicit.
class RankCode {
public:
    explicit RankCode(QPoly f) : f_(std::move(f)) {}
    const QPoly& poly() const noexcept { return f_; }
    const FieldPtr& field() const noexcept { return f_.field(); }
    /// |C_f| as a power of q.
    static constexpr unsigned log_q_size = 12;

private:
    QPoly f_;
};

inline RankCode code_from(const QPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroMap, "f is the zero map");
    return RankCode(f);
}

/// x -> a f(x) + b x
inline QPoly codeword(const RankCode& C, Elem a, Elem b) {
    QPoly w = scale(a, C.poly());
    w.set(0, C.field()->add(w[0], b));
    return w;
}

inline unsigned codeword_rank(const RankCode& C, Elem a, Elem b) { return 6 - kernel_dim(codeword(C, a, b)); }

/// F_q-coordinates with respect to the basis 1, g, ..., g^5, read off through
/// the trace-dual basis: y = sum_j Tr(y d_j) g^j.
class FqCoordinates {
public:
    explicit FqCoordinates(const Field& F) : F_(F) {
        for (std::size_t i = 0; i < 6; ++i) basis_[i] = F.pow(F.gen(), i);
        Matrix T(6, 6, F.zero());
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) T(i, j) = F.trace(F.mul(basis_[i], basis_[j]), 1);
        const Matrix Ti = inverse(F, T);
        for (std::size_t j = 0; j < 6; ++j) {
            Elem d = F.zero();
            for (std::size_t k = 0; k < 6; ++k) d = F.add(d, F.mul(Ti(j, k), basis_[k]));
            dual_[j] = d;
        }
    }

    const std::array<Elem, 6>& basis() const noexcept { return basis_; }
    const std::array<Elem, 6>& dual() const noexcept { return dual_; }

    std::array<Elem, 6> coords(Elem y) const {
        std::array<Elem, 6> c;
        for (std::size_t j = 0; j < 6; ++j) c[j] = F_.trace(F_.mul(y, dual_[j]), 1);
        return c;
    }

    /// The 6x6 matrix over F_q of an F_q-linear map; column i holds phi(g^i).
    Matrix matrix_of(const QPoly& phi) const {
        Matrix m(6, 6, F_.zero());
        for (std::size_t i = 0; i < 6; ++i) {
            const auto c = coords(evaluate(phi, basis_[i]));
            for (std::size_t r = 0; r < 6; ++r) m(r, i) = c[r];
        }
        return m;
    }

private:
    const Field& F_;
    std::array<Elem, 6> basis_{}, dual_{};
};

inline unsigned codeword_rank_explicit(const RankCode& C, const FqCoordinates& K, Elem a, Elem b) {
    return static_cast<unsigned>(rank(*C.field(), K.matrix_of(codeword(C, a, b))));
}

struct RankDistribution {
    std::map<unsigned, u64> counts;

    u64 total() const {
        u64 t = 0;
        for (auto& [r, c] : counts) t += c;
        return t;
    }
    /// Least rank of a nonzero codeword.
    unsigned min_distance() const {
        for (auto& [r, c] : counts)
            if (r > 0 && c > 0) return r;
        return 0;
    }
    friend bool operator==(const RankDistribution&, const RankDistribution&) = default;
};

enum class DistributionMode { orbit, full };

struct DistributionOptions {
    DistributionMode mode = DistributionMode::orbit;
    unsigned workers = 1;
    /// Largest number of rank computations allowed.
    u64 max_ranks = u64{1} << 26;
};

/// Ranks are constant on the orbits c (a, b), c != 0, so the orbit mode scans
/// the representatives (0, 1) and (1, b) and weights each by q^6 - 1.
inline RankDistribution rank_distribution(const RankCode& C, const DistributionOptions& opts = {}) {
    const Field& F = *C.field();
    const u64 n = F.size();
    const bool full = opts.mode == DistributionMode::full;
    if (full && (n > (u64{1} << 32) || n * n > opts.max_ranks))
        throw Error(ErrorKind::BudgetExceeded, "full distribution needs q^12 rank computations");
    if (!full && n + 1 > opts.max_ranks)
        throw Error(ErrorKind::BudgetExceeded, "orbit distribution needs q^6 rank computations");

    RankDistribution dist;
    std::mutex mu;
    if (full) {
        parallel_chunks(n, 1, opts.workers, [&](u64 lo, u64 hi) {
            std::array<u64, 7> local{};
            for (u64 ai = lo; ai < hi; ++ai) {
                const Elem a = F.at(ai);
                F.for_each(0, n, [&](u64, Elem b) { ++local[codeword_rank(C, a, b)]; });
            }
            std::lock_guard lk(mu);
            for (unsigned r = 0; r <= 6; ++r)
                if (local[r]) dist.counts[r] += local[r];
        });
        return dist;
    }
    const u64 w = n - 1;
    dist.counts[0] = 1;
    dist.counts[codeword_rank(C, F.zero(), F.one())] += w;
    parallel_chunks(n, 1 << 10, opts.workers, [&](u64 lo, u64 hi) {
        std::array<u64, 7> local{};
        F.for_each(lo, hi, [&](u64, Elem b) { ++local[codeword_rank(C, F.one(), b)]; });
        std::lock_guard lk(mu);
        for (unsigned r = 0; r <= 6; ++r)
            if (local[r]) dist.counts[r] += local[r] * w;
    });
    return dist;
}

inline unsigned min_distance(const RankCode& C, const DistributionOptions& opts = {}) {
    return rank_distribution(C, opts).min_distance();
}

struct MrdVerdict {
    unsigned min_distance = 0;
    /// |C| = q^12 against the bound q^{6(6 - d + 1)}.
    bool singleton_equality = false;
    bool mrd = false;
};

inline MrdVerdict mrd_verdict(const RankDistribution& dist) {
    MrdVerdict v;
    v.min_distance = dist.min_distance();
    v.singleton_equality = v.min_distance >= 1 && 6u * (6u - v.min_distance + 1u) == RankCode::log_q_size;
    v.mrd = v.singleton_equality && v.min_distance == 5;
    return v;
}

inline EquivVerdict codes_equivalent(const RankCode& Cf, const RankCode& Cg, const EquivOptions& opts = {}) {
    return gl_equivalent(Cf.poly(), Cg.poly(), opts);
}

struct IdealiserReport {
    bool closed = true;
    bool faithful = true;
    u64 checked = 0;  ///< nonzero c tested
};

/// Left multiplication by c != 0 maps a f + b x to (ca) f + (cb) x. Every c is
/// tested when the field has at most `full_limit` elements, else `samples`.
inline IdealiserReport left_idealiser_field_check(const RankCode& C, u64 full_limit = u64{1} << 16,
                                                  u64 samples = 2048) {
    const Field& F = *C.field();
    const u64 n = F.size();
    std::vector<u64> cs;
    if (n <= full_limit) {
        for (u64 i = 1; i < n; ++i) cs.push_back(i);
    } else {
        std::mt19937_64 rng(0x1dea115eULL);
        std::uniform_int_distribution<u64> pick(1, n - 1);
        for (u64 k = 0; k < samples; ++k) cs.push_back(pick(rng));
    }
    const std::array<std::pair<u64, u64>, 4> pairs{{{0, 1}, {1, 0}, {2, 3}, {n - 1, n / 2}}};
    const std::array<u64, 3> xs{1, 2, n - 1};
    IdealiserReport rep;
    for (u64 ci : cs) {
        const Elem c = F.at(ci);
        for (auto [ai, bi] : pairs) {
            const Elem a = F.at(ai % n), b = F.at(bi % n);
            const QPoly lhs = scale(c, codeword(C, a, b));
            const QPoly rhs = codeword(C, F.mul(c, a), F.mul(c, b));
            if (!(lhs == rhs)) rep.closed = false;
            for (u64 xi : xs) {
                const Elem x = F.at(xi % n);
                if (F.mul(c, evaluate(codeword(C, a, b), x)) != evaluate(rhs, x)) rep.closed = false;
            }
        }
        // c acts as the identity only for c = 1
        if ((c == F.one()) != (F.mul(c, F.one()) == F.one())) rep.faithful = false;
        if (c != F.one() && codeword(C, F.zero(), c) == codeword(C, F.zero(), F.one())) rep.faithful = false;
        ++rep.checked;
    }
    return rep;
}

}  // namespace scatlin

#endif  // SCATLIN_MRD_HPP
