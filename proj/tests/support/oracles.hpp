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
 * @brief Test-side oracles, kept deliberately independent of the library
 * algorithms: a cofactor-expansion determinant, a permutation-sum permanent,
 * and the hardcoded n=3 permanent-encoding placement table.
 */

#ifndef EXTPROD_TESTS_SUPPORT_ORACLES_HPP_
#define EXTPROD_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "extprod/families.hpp"
#include "extprod/matrix.hpp"
#include "extprod/scalar.hpp"

namespace extprod::testing {

/// Determinant by first-row cofactor expansion. O(n!) and recursion-heavy,
/// so callers keep n small; that is the point of an oracle.
template <typename R>
R cofactor_det(const Matrix<R>& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    const R zero = ring_traits<R>::zero_like(m(0, 0));
    R acc = zero;
    Matrix<R> minor(n - 1, n - 1, zero);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == zero) continue;
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const R term = R(m(0, j) * cofactor_det(minor));
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

/// Permanent as a plain permutation sum over index arrays; no Gray codes,
/// no per-term pruning beyond the zero product itself.
template <typename R>
R permutation_permanent(const Matrix<R>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    const R zero = ring_traits<R>::zero_like(m(0, 0));
    const R one = ring_traits<R>::one_like(m(0, 0));
    R acc = zero;
    do {
        R prod = one;
        for (std::size_t i = 0; i < n; ++i) prod *= m(i, perm[i]);
        acc += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// One nonzero entry of the pinned n=3 encoding: vector `vec` carries
/// value a_{ai,aj} (or the literal 1 when ai == 0) in column `col`.
/// Indices are 1-based matching the hand-checked table.
struct TablePlacement {
    int vec;
    int col;
    int ai;
    int aj;
};

inline const std::vector<TablePlacement>& table3_placements() {
    static const std::vector<TablePlacement> table = {
        {1, 1, 1, 1},                    // v1
        {2, 2, 0, 0},                    // v2
        {3, 7, 1, 2},   {3, 9, 1, 3},    // v3
        {4, 8, 0, 0},   {4, 10, 0, 0},   // v4
        {5, 3, 2, 2},                    // v5
        {6, 4, 0, 0},                    // v6
        {7, 11, 2, 1},  {7, 13, 2, 3},   // v7
        {8, 12, 0, 0},  {8, 14, 0, 0},   // v8
        {9, 5, 3, 3},                    // v9
        {10, 6, 0, 0},                   // v10
        {11, 15, 3, 1}, {11, 17, 3, 2},  // v11
        {12, 16, 0, 0}, {12, 18, 0, 0},  // v12
        {13, 7, 0, 0},  {14, 8, 0, 0},   // first auxiliary quadruplet
        {15, 3, 0, 0},  {16, 4, 0, 0},
        {17, 9, 0, 0},  {18, 10, 0, 0},
        {19, 5, 0, 0},  {20, 6, 0, 0},
        {21, 11, 0, 0}, {22, 12, 0, 0},
        {23, 1, 0, 0},  {24, 2, 0, 0},
        {25, 13, 0, 0}, {26, 14, 0, 0},
        {27, 5, 0, 0},  {28, 6, 0, 0},
        {29, 15, 0, 0}, {30, 16, 0, 0},
        {31, 1, 0, 0},  {32, 2, 0, 0},
        {33, 17, 0, 0}, {34, 18, 0, 0},
        {35, 3, 0, 0},  {36, 4, 0, 0},
    };
    return table;
}

/// Expected encoding family for a 3x3 matrix, assembled from the verbatim
/// placement table above rather than from the library's layout arithmetic.
template <typename R>
TwoFormFamily<R> table3_family(const Matrix<R>& a) {
    const R zero = ring_traits<R>::zero_like(a(0, 0));
    const R one = ring_traits<R>::one_like(a(0, 0));
    TwoFormFamily<R> f;
    f.m_quadruplets = 9;
    f.vectors.assign(36, std::vector<R>(18, zero));
    for (const auto& p : table3_placements()) {
        f.vectors[static_cast<std::size_t>(p.vec - 1)][static_cast<std::size_t>(p.col - 1)] =
            p.ai == 0 ? one : a(static_cast<std::size_t>(p.ai - 1), static_cast<std::size_t>(p.aj - 1));
    }
    return f;
}

} // namespace extprod::testing

#endif // EXTPROD_TESTS_SUPPORT_ORACLES_HPP_
