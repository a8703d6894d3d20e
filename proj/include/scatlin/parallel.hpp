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

#ifndef SCATLIN_PARALLEL_HPP
#define SCATLIN_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace scatlin {

inline unsigned default_workers() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

namespace detail {

template <class Body>
void run_workers(unsigned workers, Body&& body) {
    if (workers <= 1) {
        body();
        return;
    }
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            try {
                body();
            } catch (...) {
                std::lock_guard lk(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    pool.clear();
    if (err) std::rethrow_exception(err);
}

}  // namespace detail

/// Runs fn(lo, hi) over consecutive chunks of [0, total). Chunks are handed
/// out in increasing order; results must not depend on which worker ran them.
template <class Fn>
void parallel_chunks(std::uint64_t total, std::uint64_t chunk, unsigned workers, Fn&& fn) {
    chunk = std::max<std::uint64_t>(chunk, 1);
    std::atomic<std::uint64_t> next{0};
    detail::run_workers(workers, [&] {
        for (;;) {
            const std::uint64_t lo = next.fetch_add(chunk);
            if (lo >= total) return;
            fn(lo, std::min(total, lo + chunk));
        }
    });
}

/// Smallest index in [0, total) for which the chunk scanner reports a hit.
/// fn(lo, hi) returns the first hit inside [lo, hi) or nullopt. Chunks lying
/// entirely above the best hit so far are skipped, so the answer is the
/// global minimum regardless of scheduling.
template <class Fn>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t total, std::uint64_t chunk, unsigned workers,
                                                 Fn&& fn) {
    chunk = std::max<std::uint64_t>(chunk, 1);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{UINT64_MAX};
    detail::run_workers(workers, [&] {
        for (;;) {
            const std::uint64_t lo = next.fetch_add(chunk);
            if (lo >= total || lo > best.load()) return;
            if (auto hit = fn(lo, std::min(total, lo + chunk))) {
                std::uint64_t cur = best.load();
                while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
                }
            }
        }
    });
    const std::uint64_t b = best.load();
    if (b == UINT64_MAX) return std::nullopt;
    return b;
}

}  // namespace scatlin

#endif  // SCATLIN_PARALLEL_HPP
