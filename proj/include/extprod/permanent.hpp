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

/**
 * @brief Matrix permanents.
 *
 * permanent_naive sums over all n! column permutations and is intended as a
 * reference oracle only. permanent_ryser runs the inclusion-exclusion formula
 * over column subsets in Gray-code order, updating the n running row sums by
 * a single column per step.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "extprod/errors.hpp"
#include "extprod/matrix.hpp"
#include "extprod/scalar.hpp"

namespace extprod {

inline constexpr std::size_t kPermanentNaiveMaxN = 10;
inline constexpr std::size_t kPermanentRyserMaxN = 30;

/// Permanent by explicit permutation sum. O(n * n!) products; n <= 10.
template <typename R>
R permanent_naive(const Matrix<R>& m) {
    using T = ring_traits<R>;
    if (!m.square()) throw DimensionError("permanent_naive: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) throw DimensionError("permanent_naive: empty matrix");
    if (n > kPermanentNaiveMaxN) {
        throw SizeGuardError("permanent_naive: n exceeds guard of 10");
    }

    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    R total = T::zero_like(m(0, 0));
    do {
        R prod = T::one_like(m(0, 0));
        bool vanished = false;
        for (std::size_t i = 0; i < n; ++i) {
            const R& a = m(i, cols[i]);
            if (T::is_zero(a)) {
                vanished = true;
                break;
            }
            prod *= a;
        }
        if (!vanished) total += prod;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return total;
}

/// Permanent by Ryser inclusion-exclusion with Gray-code subset walk.
/// O(n * 2^n) ring operations; n <= 30.
template <typename R>
R permanent_ryser(const Matrix<R>& m) {
    using T = ring_traits<R>;
    if (!m.square()) throw DimensionError("permanent_ryser: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) throw DimensionError("permanent_ryser: empty matrix");
    if (n > kPermanentRyserMaxN) {
        throw SizeGuardError("permanent_ryser: n exceeds guard of 30");
    }

    std::vector<R> row_sums(n, T::zero_like(m(0, 0)));
    R total = T::zero_like(m(0, 0));
    const std::uint64_t count = std::uint64_t{1} << n;
    std::uint64_t subset = 0;
    std::size_t popcnt = 0;
    for (std::uint64_t t = 1; t < count; ++t) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(t));
        const std::uint64_t bit = std::uint64_t{1} << b;
        subset ^= bit;
        if ((subset & bit) != 0) {
            ++popcnt;
            for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(i, b);
        } else {
            --popcnt;
            for (std::size_t i = 0; i < n; ++i) row_sums[i] -= m(i, b);
        }
        R term = T::one_like(m(0, 0));
        bool vanished = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (T::is_zero(row_sums[i])) {
                vanished = true;
                break;
            }
            term *= row_sums[i];
        }
        if (vanished) continue;
        if (((n - popcnt) & 1u) != 0) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

} // namespace extprod
