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

#ifndef SCATLIN_SCATTER_HPP
#define SCATLIN_SCATTER_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "parallel.hpp"
#include "qpoly.hpp"

namespace scatlin {

struct ScanOptions {
    unsigned workers = default_workers();
    /// Report every violation instead of stopping at the first one.
    bool exhaustive = false;
    /// Refuse scans over fields with more elements than this.
    std::uint64_t max_elements = std::uint64_t{1} << 28;
};

/// weight -> number of points <(1, m)> of PG(1, q^6) of that weight.
struct WeightSpectrum {
    std::map<unsigned, std::uint64_t> counts;

    std::uint64_t size() const {
        std::uint64_t s = 0;
        for (const auto& [w, c] : counts) s += c;
        return s;
    }

    /// sum_w count(w) (q^w - 1) == q^6 - 1
    bool mass_conserved(const Field& F) const {
        unsigned __int128 total = 0;
        for (const auto& [w, c] : counts) {
            unsigned __int128 qw = 1;
            for (unsigned i = 0; i < w; ++i) qw *= F.q();
            total += static_cast<unsigned __int128>(c) * (qw - 1);
        }
        return total == F.order();
    }

    bool scattered() const { return counts.size() == 1 && counts.begin()->first == 1; }

    friend bool operator==(const WeightSpectrum&, const WeightSpectrum&) = default;
};

struct ScatterVerdict {
    bool scattered = true;
    /// Oracle: the slope m of a point of weight >= 2, i.e. dim ker(f - m x) >= 2.
    /// Dickson: the value m substituted for a_0 where both minors vanish.
    std::optional<Elem> witness;
    /// Every violation in enumeration order (exhaustive mode only).
    std::vector<Elem> all_witnesses;
};

namespace detail {

inline void require_scannable(const Field& F, const ScanOptions& opts) {
    if (F.size() > opts.max_elements) throw Error(ErrorKind::BudgetExceeded, "field too large for an exhaustive scan");
}

// counts[slot(m)] = #{x != 0 : f(x) = m x}
inline std::vector<std::uint32_t> quotient_buckets(const QPoly& f, const ScanOptions& opts) {
    const Field& F = *f.field();
    require_scannable(F, opts);
    std::vector<std::uint32_t> counts(F.size(), 0);
    std::array<int, 6> terms{};
    int nterms = 0;
    for (int i = 0; i < 6; ++i)
        if (!F.is_zero(f[static_cast<std::size_t>(i)])) terms[static_cast<std::size_t>(nterms++)] = i;
    parallel_chunks(F.size(), 1 << 14, opts.workers, [&](std::uint64_t lo, std::uint64_t hi) {
        F.for_each(std::max<std::uint64_t>(lo, 1), hi, [&](std::uint64_t, Elem x) {
            Elem y = F.zero();
            for (int t = 0; t < nterms; ++t) {
                const auto i = static_cast<std::size_t>(terms[static_cast<std::size_t>(t)]);
                y = F.add(y, F.mul(f[i], F.frob(x, static_cast<long long>(i))));
            }
            const Elem m = F.div(y, x);
            std::atomic_ref<std::uint32_t>(counts[F.slot(m)]).fetch_add(1, std::memory_order_relaxed);
        });
    });
    return counts;
}

inline unsigned weight_of_count(const Field& F, std::uint64_t c) {
    unsigned w = 0;
    std::uint64_t qw = 1;
    while (qw - 1 < c) {
        qw *= F.q();
        ++w;
    }
    if (qw - 1 != c) throw Error(ErrorKind::InvalidParameter, "bucket size is not q^w - 1");
    return w;
}

}  // namespace detail

/// Weights of the points <(1, m)> of L_f, from one pass over f(x)/x.
/// The point <(0, 1)> has weight 0 for U_f and is not listed.
inline WeightSpectrum weight_spectrum(const QPoly& f, const ScanOptions& opts = {}) {
    const Field& F = *f.field();
    const auto counts = detail::quotient_buckets(f, opts);
    WeightSpectrum spec;
    for (auto c : counts)
        if (c) ++spec.counts[detail::weight_of_count(F, c)];
    return spec;
}

/// dim_{F_q} of U_f intersected with <(1, m)>, i.e. dim ker(f - m x).
inline unsigned point_weight(const QPoly& f, Elem m) { return kernel_dim(shift(f, m)); }

/// Scatteredness by direct enumeration of f(x)/x. Theta(q^6) evaluations.
inline ScatterVerdict is_scattered_oracle(const QPoly& f, const ScanOptions& opts = {}) {
    const Field& F = *f.field();
    const auto counts = detail::quotient_buckets(f, opts);
    ScatterVerdict v;
    // witness order follows the enumeration order of m
    F.for_each(0, F.size(), [&](std::uint64_t, Elem m) {
        if (!v.scattered && !opts.exhaustive) return;
        if (counts[F.slot(m)] > F.q() - 1) {
            if (v.scattered) v.witness = m;
            v.scattered = false;
            if (opts.exhaustive) v.all_witnesses.push_back(m);
        }
    });
    return v;
}

namespace detail {

// Both Dickson minors of f with m in the a_0 slot vanish.
class DicksonScanner {
public:
    explicit DicksonScanner(const QPoly& f) : F_(*f.field()) {
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                full_[static_cast<std::size_t>(i * 6 + j)] =
                    F_.frob(f[static_cast<std::size_t>((j - i + 6) % 6)], i);
    }

    bool common_root(Elem m) const {
        std::array<Elem, 6> mq;
        for (int i = 0; i < 6; ++i) mq[static_cast<std::size_t>(i)] = F_.frob(m, i);
        std::array<Elem, 25> m5;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) m5[i * 5 + j] = (i == j + 1) ? mq[i] : full_[i * 6 + j + 1];
        if (!F_.is_zero(det_fixed<5>(F_, m5))) return false;
        std::array<Elem, 36> m6 = full_;
        for (std::size_t i = 0; i < 6; ++i) m6[i * 6 + i] = mq[i];
        return F_.is_zero(det_fixed<6>(F_, m6));
    }

private:
    const Field& F_;
    std::array<Elem, 36> full_;
};

}  // namespace detail

/// Scatteredness via the Dickson-minor criterion: f is scattered iff no m
/// makes both the 6x6 matrix M(m) and its 5x5 minor singular.
inline ScatterVerdict is_scattered_dickson(const QPoly& f, const ScanOptions& opts = {}) {
    const Field& F = *f.field();
    detail::require_scannable(F, opts);
    const detail::DicksonScanner scan(f);
    ScatterVerdict v;
    constexpr std::uint64_t chunk = 1 << 12;
    if (!opts.exhaustive) {
        auto hit = parallel_find_first(F.size(), chunk, opts.workers,
                                       [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<std::uint64_t> {
                                           std::optional<std::uint64_t> found;
                                           F.for_each(lo, hi, [&](std::uint64_t idx, Elem m) {
                                               if (!found && scan.common_root(m)) found = idx;
                                           });
                                           return found;
                                       });
        if (hit) {
            v.scattered = false;
            v.witness = F.at(*hit);
        }
        return v;
    }
    std::mutex mu;
    std::vector<std::uint64_t> hits;
    parallel_chunks(F.size(), chunk, opts.workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> local;
        F.for_each(lo, hi, [&](std::uint64_t idx, Elem m) {
            if (scan.common_root(m)) local.push_back(idx);
        });
        std::lock_guard lk(mu);
        hits.insert(hits.end(), local.begin(), local.end());
    });
    std::sort(hits.begin(), hits.end());
    for (auto idx : hits) v.all_witnesses.push_back(F.at(idx));
    if (!hits.empty()) {
        v.scattered = false;
        v.witness = v.all_witnesses.front();
    }
    return v;
}

/// True iff both Dickson minors vanish at m (a single-point Dickson check).
inline bool dickson_common_root(const QPoly& f, Elem m) { return detail::DicksonScanner(f).common_root(m); }

}  // namespace scatlin

#endif  // SCATLIN_SCATTER_HPP
