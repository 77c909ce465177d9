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
 * @brief Mixed discriminants and the rank-2 embedding into D_{2,2}.
 *
 * D(A_1, ..., A_M) is the coefficient of t_1 t_2 ... t_M in
 * det(t_1 A_1 + ... + t_M A_M), with no 1/M! factor: equivalently the sum
 * over all bijections f of det of the matrix whose row i comes from A_{f(i)}.
 * For rank-2 factorized A_i = x_{i,0} x_{i,0}^T + x_{i,1} x_{i,1}^T the
 * embedding into 2M dimensions turns D into a signed D_{2,2}:
 * D = (-1)^{M(M-1)/2} D_{2,2}.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "extprod/d22.hpp"
#include "extprod/det.hpp"
#include "extprod/errors.hpp"
#include "extprod/families.hpp"
#include "extprod/matrix.hpp"
#include "extprod/scalar.hpp"

namespace extprod {

inline constexpr std::size_t kMixedDiscMaxM = 8;
inline constexpr std::size_t kMdVerifyMaxM = 6;

/// Mixed discriminant by M!-term multilinear expansion. Exact scalars only;
/// guarded at M <= 8.
template <typename R>
R mixed_discriminant(const std::vector<Matrix<R>>& mats) {
    if constexpr (!ring_traits<R>::is_exact) {
        throw ScalarKindError("mixed_discriminant: exact scalar kinds only");
    } else {
        const std::size_t m = mats.size();
        if (m == 0) throw DimensionError("mixed_discriminant: need at least one matrix");
        if (m > kMixedDiscMaxM) throw SizeGuardError("mixed_discriminant: M exceeds guard of 8");
        for (const auto& a : mats) {
            if (!a.square() || a.rows() != m) {
                throw DimensionError("mixed_discriminant: every matrix must be M x M");
            }
        }

        std::vector<std::size_t> pick(m);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        Matrix<R> scratch(m, m);
        R sum = ring_traits<R>::zero_like(mats[0](0, 0));
        do {
            for (std::size_t i = 0; i < m; ++i) scratch.set_row(i, mats[pick[i]].row(i));
            sum += det_inplace(scratch);
        } while (std::next_permutation(pick.begin(), pick.end()));
        return sum;
    }
}

/// Rank-2 factor lists: A_i = x0[i] x0[i]^T + x1[i] x1[i]^T, all in dim M.
template <typename R>
struct Rank2Factors {
    std::size_t m = 0;
    std::vector<RowVec<R>> x0;
    std::vector<RowVec<R>> x1;

    void validate() const {
        if (m == 0) throw DimensionError("Rank2Factors: M must be >= 1");
        if (x0.size() != m || x1.size() != m) {
            throw DimensionError("Rank2Factors: expected M vectors in x0 and x1");
        }
        for (const auto* side : {&x0, &x1}) {
            for (const auto& v : *side) {
                if (v.size() != m) throw DimensionError("Rank2Factors: every vector must have dim M");
            }
        }
    }
};

/// Assembles the explicit M x M matrices A_i from the factors.
template <typename R>
std::vector<Matrix<R>> assemble_rank2(const Rank2Factors<R>& f) {
    f.validate();
    std::vector<Matrix<R>> out;
    out.reserve(f.m);
    for (std::size_t i = 0; i < f.m; ++i) {
        Matrix<R> a(f.m, f.m);
        for (std::size_t r = 0; r < f.m; ++r) {
            for (std::size_t c = 0; c < f.m; ++c) {
                a(r, c) = f.x0[i][r] * f.x0[i][c] + f.x1[i][r] * f.x1[i][c];
            }
        }
        out.push_back(std::move(a));
    }
    return out;
}

/// Embeds the factors as 4M vectors in dimension 2M:
/// v_{4i} = x0[i] (+) 0, v_{4i+1} = 0 (+) x0[i], and likewise x1[i].
template <typename R>
TwoFormFamily<R> embed_rank2(const Rank2Factors<R>& f) {
    f.validate();
    const R zero = ring_traits<R>::zero_like(f.x0[0][0]);
    TwoFormFamily<R> out;
    out.m_quadruplets = f.m;
    out.vectors.assign(4 * f.m, RowVec<R>(2 * f.m, zero));
    for (std::size_t i = 0; i < f.m; ++i) {
        for (std::size_t c = 0; c < f.m; ++c) {
            out.vectors[4 * i][c] = f.x0[i][c];
            out.vectors[4 * i + 1][f.m + c] = f.x0[i][c];
            out.vectors[4 * i + 2][c] = f.x1[i][c];
            out.vectors[4 * i + 3][f.m + c] = f.x1[i][c];
        }
    }
    return out;
}

template <typename R>
struct MdVerifyResult {
    R lhs;
    R rhs;
    bool equal;
};

/// Checks D(A_1,...,A_M) = (-1)^{M(M-1)/2} D_{2,2} on the embedded family,
/// both sides by independent expansions. Guarded at M <= 6.
template <typename R>
MdVerifyResult<R> verify_md_identity(const Rank2Factors<R>& f) {
    f.validate();
    if (f.m > kMdVerifyMaxM) throw SizeGuardError("verify_md_identity: M exceeds guard of 6");
    R lhs = mixed_discriminant(assemble_rank2(f));
    R d22 = d22_subset_sum(embed_rank2(f));
    R rhs = ((f.m * (f.m - 1) / 2) % 2 == 1) ? R(-d22) : d22;
    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

} // namespace extprod
