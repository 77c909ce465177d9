/*
 * Copyright 2026 The extprod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace extprod {

/// 0 = auto: EXTPROD_THREADS if set to a positive integer, else hardware
/// concurrency. An explicit request always wins.
inline unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("EXTPROD_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Contiguous [begin, end) slices covering [0, total), at most n_blocks of them.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> block_ranges(std::uint64_t total,
                                                                         unsigned n_blocks) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (total == 0) return out;
    const std::uint64_t blocks = std::min<std::uint64_t>(n_blocks ? n_blocks : 1, total);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        const std::uint64_t lo = total * b / blocks;
        const std::uint64_t hi = total * (b + 1) / blocks;
        out.emplace_back(lo, hi);
    }
    return out;
}

/// Runs fn(block_index, begin, end) on each block; blocks > 1 use std::thread.
/// Callers combine per-block results in block order so sums stay deterministic.
inline void run_blocks(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ranges,
                       const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
    if (ranges.size() <= 1) {
        if (!ranges.empty()) fn(0, ranges[0].first, ranges[0].second);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t b = 0; b < ranges.size(); ++b) {
        pool.emplace_back([&, b] { fn(b, ranges[b].first, ranges[b].second); });
    }
    for (auto& t : pool) t.join();
}

} // namespace extprod
