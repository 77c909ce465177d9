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
 * @brief The permanent -> D_{2,2} reduction and its cycle-cover reading.
 *
 * For an N x N matrix A, reduce_permanent emits 4N^2 vectors in dimension
 * 2N^2 whose D_{2,2} equals Per(A) exactly. The same data can be viewed as a
 * directed graph on N^2 node pairs with two edge colors, where D_{2,2} is the
 * signed sum over cycle covers constrained to use one color per pair;
 * cycle_cover_sum evaluates that sum by brute force as an independent oracle.
 *
 * Node pairs are laid out as: main pair P_i in slot i for i < N, then
 * auxiliary pair Q_{ij} for every ordered i != j in lexicographic order.
 * Slot s owns columns 2s (A-column) and 2s+1 (B-column).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "extprod/d22.hpp"
#include "extprod/errors.hpp"
#include "extprod/families.hpp"
#include "extprod/matrix.hpp"
#include "extprod/permanent.hpp"
#include "extprod/scalar.hpp"

namespace extprod {

inline constexpr std::size_t kVerifyReductionMaxN = 4;
inline constexpr std::size_t kCycleCoverMaxNodes = 12;

/// Slot and column bookkeeping for the reduction of an N x N matrix.
struct ReductionLayout {
    explicit ReductionLayout(std::size_t n) : n_(n) {
        if (n == 0) throw DimensionError("ReductionLayout: N must be >= 1");
    }

    std::size_t n() const { return n_; }
    std::size_t pairs() const { return n_ * n_; }
    std::size_t dim() const { return 2 * pairs(); }

    /// Slot of main pair P_i, i in [0, N).
    std::size_t main_slot(std::size_t i) const { return i; }

    /// Slot of auxiliary pair Q_{ij}, ordered i != j, lexicographic.
    std::size_t aux_slot(std::size_t i, std::size_t j) const {
        return n_ + i * (n_ - 1) + (j > i ? j - 1 : j);
    }

    std::size_t a_col(std::size_t slot) const { return 2 * slot; }
    std::size_t b_col(std::size_t slot) const { return 2 * slot + 1; }

  private:
    std::size_t n_;
};

/**
 * @brief Builds the TwoFormFamily whose D_{2,2} is Per(a).
 *
 * Quadruplet of slot s holds (A-row, B-row) for color 1 then color 2:
 *   - main pair P_i, color 1: a_{ii} at P_i's A-column; 1 at P_i's B-column.
 *   - main pair P_i, color 2: a_{ij} at Q_{ij}'s A-column for every j != i;
 *     1 at each Q_{ij}'s B-column.
 *   - aux pair Q_{ij}, color 1: unit self-loops on its own columns.
 *   - aux pair Q_{ij}, color 2: 1 at P_j's A- and B-columns.
 */
template <typename R>
TwoFormFamily<R> reduce_permanent(const Matrix<R>& a) {
    if constexpr (!ring_traits<R>::is_exact) {
        throw ScalarKindError("reduce_permanent: exact scalar kinds only");
    } else {
        if (!a.square()) throw DimensionError("reduce_permanent: matrix must be square");
        const std::size_t n = a.rows();
        if (n == 0) throw DimensionError("reduce_permanent: empty matrix");
        const ReductionLayout layout(n);

        const R zero = ring_traits<R>::zero_like(a(0, 0));
        const R one = ring_traits<R>::one_like(a(0, 0));

        TwoFormFamily<R> f;
        f.m_quadruplets = layout.pairs();
        f.vectors.assign(4 * layout.pairs(), RowVec<R>(layout.dim(), zero));

        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t s = layout.main_slot(i);
            f.vectors[4 * s][layout.a_col(s)] = a(i, i);
            f.vectors[4 * s + 1][layout.b_col(s)] = one;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const std::size_t q = layout.aux_slot(i, j);
                f.vectors[4 * s + 2][layout.a_col(q)] = a(i, j);
                f.vectors[4 * s + 3][layout.b_col(q)] = one;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const std::size_t s = layout.aux_slot(i, j);
                const std::size_t pj = layout.main_slot(j);
                f.vectors[4 * s][layout.a_col(s)] = one;
                f.vectors[4 * s + 1][layout.b_col(s)] = one;
                f.vectors[4 * s + 2][layout.a_col(pj)] = one;
                f.vectors[4 * s + 3][layout.b_col(pj)] = one;
            }
        }
        return f;
    }
}

template <typename R>
struct VerifyResult {
    R permanent;
    R d22;
    bool equal;
};

/// Computes Per(a) and D_{2,2}(reduce_permanent(a)) by independent kernels
/// and reports exact equality. Guarded at N <= 4 (2^{N^2} determinants).
template <typename R>
VerifyResult<R> verify_reduction(const Matrix<R>& a, unsigned threads = 1) {
    if (!a.square()) throw DimensionError("verify_reduction: matrix must be square");
    if (a.rows() == 0) throw DimensionError("verify_reduction: empty matrix");
    if (a.rows() > kVerifyReductionMaxN) {
        throw SizeGuardError("verify_reduction: N exceeds guard of 4");
    }
    R per = permanent_ryser(a);
    R d = d22_subset_sum(reduce_permanent(a), threads);
    const bool equal = per == d;
    return {std::move(per), std::move(d), equal};
}

/**
 * @brief Directed graph on 2M paired nodes with two out-edge colors.
 *
 * Row u of colorX holds the color-X out-edge weights of node u. Nodes 2q and
 * 2q+1 form pair q; a cycle cover must pick one color per pair.
 */
template <typename R>
struct TwoColorGraph {
    std::size_t n_pairs = 0;
    std::vector<RowVec<R>> color1;
    std::vector<RowVec<R>> color2;

    std::size_t nodes() const { return 2 * n_pairs; }

    void validate() const {
        if (n_pairs == 0) throw DimensionError("TwoColorGraph: M must be >= 1");
        if (color1.size() != nodes() || color2.size() != nodes()) {
            throw DimensionError("TwoColorGraph: expected 2M rows per color");
        }
        for (const auto* rows : {&color1, &color2}) {
            for (const auto& r : *rows) {
                if (r.size() != nodes()) {
                    throw DimensionError("TwoColorGraph: every row must have dim 2M");
                }
            }
        }
    }
};

/// Quadruplet q <-> (color1 rows of pair q, color2 rows of pair q).
template <typename R>
TwoColorGraph<R> graph_from_family(const TwoFormFamily<R>& f) {
    f.validate();
    TwoColorGraph<R> g;
    g.n_pairs = f.m_quadruplets;
    g.color1.resize(g.nodes());
    g.color2.resize(g.nodes());
    for (std::size_t q = 0; q < g.n_pairs; ++q) {
        g.color1[2 * q] = f.vectors[4 * q];
        g.color1[2 * q + 1] = f.vectors[4 * q + 1];
        g.color2[2 * q] = f.vectors[4 * q + 2];
        g.color2[2 * q + 1] = f.vectors[4 * q + 3];
    }
    return g;
}

template <typename R>
TwoFormFamily<R> family_from_graph(const TwoColorGraph<R>& g) {
    g.validate();
    TwoFormFamily<R> f;
    f.m_quadruplets = g.n_pairs;
    f.vectors.resize(4 * g.n_pairs);
    for (std::size_t q = 0; q < g.n_pairs; ++q) {
        f.vectors[4 * q] = g.color1[2 * q];
        f.vectors[4 * q + 1] = g.color1[2 * q + 1];
        f.vectors[4 * q + 2] = g.color2[2 * q];
        f.vectors[4 * q + 3] = g.color2[2 * q + 1];
    }
    return f;
}

/**
 * @brief Signed sum over color-constrained cycle covers, by brute force.
 *
 * Enumerates every pair-coloring and every permutation of the 2M nodes;
 * each cover contributes the product of chosen-color edge weights times
 * (-1)^(2M - #cycles). Independent of the determinant machinery on purpose.
 * Guarded at 2M <= 12.
 */
template <typename R>
R cycle_cover_sum(const TwoColorGraph<R>& g) {
    g.validate();
    const std::size_t nodes = g.nodes();
    if (nodes > kCycleCoverMaxNodes) {
        throw SizeGuardError("cycle_cover_sum: 2M exceeds guard of 12");
    }
    using T = ring_traits<R>;
    const R exemplar = g.color1[0][0];
    R total = T::zero_like(exemplar);

    std::vector<const RowVec<R>*> row(nodes);
    std::vector<std::size_t> sigma(nodes);

    const auto leaf_sign_apply = [&](const R& prod) {
        std::size_t cycles = 0;
        std::uint32_t seen = 0;
        for (std::size_t u = 0; u < nodes; ++u) {
            if ((seen >> u) & 1u) continue;
            ++cycles;
            std::size_t v = u;
            while (!((seen >> v) & 1u)) {
                seen |= std::uint32_t{1} << v;
                v = sigma[v];
            }
        }
        if ((nodes - cycles) & 1u) {
            total -= prod;
        } else {
            total += prod;
        }
    };

    const auto recurse = [&](auto&& self, std::size_t u, std::uint32_t used, const R& prod) -> void {
        if (u == nodes) {
            leaf_sign_apply(prod);
            return;
        }
        for (std::size_t t = 0; t < nodes; ++t) {
            if ((used >> t) & 1u) continue;
            const R& w = (*row[u])[t];
            if (T::is_zero(w)) continue;
            sigma[u] = t;
            self(self, u + 1, used | (std::uint32_t{1} << t), R(prod * w));
        }
    };

    const std::uint64_t colorings = std::uint64_t{1} << g.n_pairs;
    for (std::uint64_t c = 0; c < colorings; ++c) {
        for (std::size_t u = 0; u < nodes; ++u) {
            row[u] = ((c >> (u / 2)) & 1u) ? &g.color2[u] : &g.color1[u];
        }
        recurse(recurse, 0, 0, T::one_like(exemplar));
    }
    return total;
}

} // namespace extprod
