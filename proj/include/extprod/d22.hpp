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
 * @brief Exact evaluators for D_{2,2} and the generalized D_{k,r}.
 *
 * d22_subset_sum expands the sum of 2^M stacked determinants directly;
 * d22_wedge multiplies the M two-forms in a sparse multivector and reads off
 * the top coefficient. The two routes share no code beyond the scalar layer,
 * which is the point: they verify each other. dkr_eval is the blade-choice
 * generalization covering k-forms of rank at most r.
 */

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "extprod/det.hpp"
#include "extprod/errors.hpp"
#include "extprod/families.hpp"
#include "extprod/matrix.hpp"
#include "extprod/parallel.hpp"
#include "extprod/scalar.hpp"

namespace extprod {

/// Hard cap on intermediate multivector terms in d22_wedge.
inline constexpr std::size_t kWedgeTermCap = std::size_t{1} << 22;

/// Hard cap on blade choices (r^M) in dkr_eval.
inline constexpr std::uint64_t kDkrChoiceCap = std::uint64_t{1} << 24;

namespace detail {

/// Fills the 2M x 2M stacked matrix for one choice-bit subset: quadruplet q
/// contributes its first pair when bit q of `subset` is 0, else its second.
template <typename R>
void fill_choice_matrix(const TwoFormFamily<R>& f, std::uint64_t subset, Matrix<R>& out) {
    const std::size_t m = f.m_quadruplets;
    for (std::size_t q = 0; q < m; ++q) {
        const std::size_t base = 4 * q + 2 * ((subset >> q) & 1u);
        out.set_row(2 * q, {f.vectors[base].data(), f.vectors[base].size()});
        out.set_row(2 * q + 1, {f.vectors[base + 1].data(), f.vectors[base + 1].size()});
    }
}

/// Sign of e_A wedge e_B for disjoint index masks: parity of the number of
/// pairs (a, b) with a in A, b in B, a > b.
inline int wedge_sign(std::uint64_t a, std::uint64_t b) {
    int parity = 0;
    while (b) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(b));
        b &= b - 1;
        parity ^= std::popcount(a >> (low + 1)) & 1;
    }
    return parity ? -1 : 1;
}

} // namespace detail

/**
 * @brief D_{2,2} as the sum of 2^M stacked determinants.
 *
 * Subsets walk in Gray-code order; with threads > 1 the subset space is split
 * into contiguous blocks whose partial sums are combined in block order, so
 * the result does not depend on the thread count.
 */
template <typename R>
R d22_subset_sum(const TwoFormFamily<R>& f, unsigned threads = 1) {
    f.validate();
    const std::size_t m = f.m_quadruplets;
    if (m >= 63) throw SizeGuardError("d22_subset_sum: M too large for subset enumeration");
    const R exemplar = f.vectors[0][0];
    const std::uint64_t total = std::uint64_t{1} << m;

    const auto ranges = block_ranges(total, resolve_threads(threads));
    std::vector<R> partial(ranges.size(), ring_traits<R>::zero_like(exemplar));
    run_blocks(ranges, [&](std::size_t block, std::uint64_t lo, std::uint64_t hi) {
        Matrix<R> scratch(2 * m, 2 * m);
        R sum = ring_traits<R>::zero_like(exemplar);
        for (std::uint64_t t = lo; t < hi; ++t) {
            const std::uint64_t subset = t ^ (t >> 1);
            detail::fill_choice_matrix(f, subset, scratch);
            sum += det_inplace(scratch);
        }
        partial[block] = std::move(sum);
    });

    R out = ring_traits<R>::zero_like(exemplar);
    for (auto& p : partial) out += p;
    return out;
}

/**
 * @brief D_{2,2} as an exterior product, via a sparse multivector.
 *
 * Multiplies in one two-form at a time; a multivector is a map from basis
 * index masks to coefficients. Exact scalars only. Throws SizeGuardError if
 * an intermediate multivector exceeds `term_cap` terms.
 */
template <typename R>
R d22_wedge(const TwoFormFamily<R>& f, std::size_t term_cap = kWedgeTermCap) {
    if constexpr (!ring_traits<R>::is_exact) {
        throw ScalarKindError("d22_wedge: exact scalar kinds only");
    } else {
        f.validate();
        const std::size_t dim = f.dim();
        if (dim > 64) throw SizeGuardError("d22_wedge: dimension exceeds 64");
        const R exemplar = f.vectors[0][0];
        const R zero = ring_traits<R>::zero_like(exemplar);

        std::map<std::uint64_t, R> acc;
        acc.emplace(0, ring_traits<R>::one_like(exemplar));

        for (std::size_t q = 0; q < f.m_quadruplets; ++q) {
            // Expand this quadruplet's two-form into 2-blade coefficients.
            std::map<std::uint64_t, R> form;
            for (int pair = 0; pair < 2; ++pair) {
                const RowVec<R>& x = f.vectors[4 * q + 2 * pair];
                const RowVec<R>& y = f.vectors[4 * q + 2 * pair + 1];
                for (std::size_t i = 0; i < dim; ++i) {
                    for (std::size_t j = i + 1; j < dim; ++j) {
                        R c = x[i] * y[j] - x[j] * y[i];
                        if (ring_traits<R>::is_zero(c)) continue;
                        const std::uint64_t mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
                        auto it = form.find(mask);
                        if (it == form.end()) {
                            form.emplace(mask, std::move(c));
                        } else {
                            it->second += c;
                        }
                    }
                }
            }

            std::map<std::uint64_t, R> next;
            for (const auto& [ma, ca] : acc) {
                if (ring_traits<R>::is_zero(ca)) continue;
                for (const auto& [mb, cb] : form) {
                    if ((ma & mb) != 0) continue;
                    R c = ca * cb;
                    if (detail::wedge_sign(ma, mb) < 0) c = -c;
                    auto it = next.find(ma | mb);
                    if (it == next.end()) {
                        next.emplace(ma | mb, std::move(c));
                    } else {
                        it->second += c;
                    }
                    if (next.size() > term_cap) {
                        throw SizeGuardError("d22_wedge: multivector term cap exceeded");
                    }
                }
            }
            for (auto it = next.begin(); it != next.end();) {
                if (ring_traits<R>::is_zero(it->second)) {
                    it = next.erase(it);
                } else {
                    ++it;
                }
            }
            acc = std::move(next);
        }

        const std::uint64_t top = dim == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
        auto it = acc.find(top);
        return it == acc.end() ? zero : it->second;
    }
}

/**
 * @brief Generalized exterior product of M k-forms of rank <= r.
 *
 * Enumerates all blade choices (mixed radix over each form's blade count) and
 * sums the determinants of the stacked kM x kM matrices. Exact scalars only;
 * guarded by r^M <= 2^24. For k = 1, r = 1 this is the determinant of the
 * stacked matrix.
 */
template <typename R>
R dkr_eval(const KFormFamily<R>& f) {
    if constexpr (!ring_traits<R>::is_exact) {
        throw ScalarKindError("dkr_eval: exact scalar kinds only");
    } else {
        f.validate();
        const std::size_t m = f.m_forms();
        const std::size_t dim = f.dim();
        const std::size_t r = f.max_rank();

        if (r > kDkrChoiceCap) throw SizeGuardError("dkr_eval: rank exceeds choice cap");
        std::uint64_t worst = 1;
        for (std::size_t i = 0; i < m; ++i) {
            worst *= r;
            if (worst > kDkrChoiceCap) throw SizeGuardError("dkr_eval: r^M exceeds choice cap");
        }

        // A form with no blades is the zero form, so the product vanishes.
        const RowVec<R>* any_row = nullptr;
        bool has_empty_form = false;
        for (const auto& form : f.forms) {
            if (form.empty()) {
                has_empty_form = true;
            } else if (!any_row) {
                any_row = &form[0][0];
            }
        }
        if (!any_row) return R{};
        const R exemplar = (*any_row)[0];
        if (has_empty_form) return ring_traits<R>::zero_like(exemplar);

        std::vector<std::size_t> digit(m, 0);
        Matrix<R> scratch(dim, dim);
        R sum = ring_traits<R>::zero_like(exemplar);
        bool done = false;
        while (!done) {
            for (std::size_t i = 0; i < m; ++i) {
                const auto& blade = f.forms[i][digit[i]];
                for (std::size_t s = 0; s < f.k; ++s) {
                    scratch.set_row(f.k * i + s, {blade[s].data(), blade[s].size()});
                }
            }
            sum += det_inplace(scratch);

            done = true;
            for (std::size_t i = 0; i < m; ++i) {
                if (++digit[i] < f.forms[i].size()) {
                    done = false;
                    break;
                }
                digit[i] = 0;
            }
        }
        return sum;
    }
}

} // namespace extprod
