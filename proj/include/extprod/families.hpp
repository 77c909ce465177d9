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
 * @brief Input families for the exterior-product evaluators.
 *
 * A TwoFormFamily holds M quadruplets of row vectors in dimension 2M; each
 * quadruplet is a rank-2 two-form v∧w + x∧y given by its four rows. A
 * KFormFamily generalizes this to M k-forms, each a sum of at most r
 * decomposable blades of k rows in dimension kM.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "extprod/errors.hpp"
#include "extprod/matrix.hpp"

namespace extprod {

/**
 * @brief M quadruplets of row vectors in dimension 2M.
 *
 * Quadruplet q (0-based) owns vectors[4q .. 4q+3]. Choice bit 0 selects the
 * pair (4q, 4q+1), choice bit 1 the pair (4q+2, 4q+3).
 */
template <typename R>
struct TwoFormFamily {
    std::size_t m_quadruplets = 0;
    std::vector<RowVec<R>> vectors;

    std::size_t dim() const { return 2 * m_quadruplets; }

    void validate() const {
        if (m_quadruplets == 0) throw DimensionError("TwoFormFamily: M must be >= 1");
        if (vectors.size() != 4 * m_quadruplets) {
            throw DimensionError("TwoFormFamily: expected " + std::to_string(4 * m_quadruplets) +
                                 " vectors, got " + std::to_string(vectors.size()));
        }
        for (const auto& v : vectors) {
            if (v.size() != dim()) {
                throw DimensionError("TwoFormFamily: every vector must have dim " +
                                     std::to_string(dim()));
            }
        }
    }
};

/**
 * @brief M forms of degree k, each a list of at most r blades of k rows.
 *
 * forms[m] is the blade list of form m; each blade is an ordered list of k
 * row vectors in dimension k*M. The rank bound r is not stored; it is the
 * maximum blade count over the forms.
 */
template <typename R>
struct KFormFamily {
    std::size_t k = 0;
    std::vector<std::vector<std::vector<RowVec<R>>>> forms;

    std::size_t m_forms() const { return forms.size(); }
    std::size_t dim() const { return k * forms.size(); }

    std::size_t max_rank() const {
        std::size_t r = 0;
        for (const auto& f : forms) r = std::max(r, f.size());
        return r;
    }

    void validate() const {
        if (k == 0) throw DimensionError("KFormFamily: k must be >= 1");
        if (forms.empty()) throw DimensionError("KFormFamily: M must be >= 1");
        for (const auto& form : forms) {
            for (const auto& blade : form) {
                if (blade.size() != k) {
                    throw DimensionError("KFormFamily: every blade must consist of k vectors");
                }
                for (const auto& v : blade) {
                    if (v.size() != dim()) {
                        throw DimensionError("KFormFamily: every vector must have dim " +
                                             std::to_string(dim()));
                    }
                }
            }
        }
    }
};

/// Views a TwoFormFamily as the equivalent KFormFamily (k = 2, r = 2).
template <typename R>
KFormFamily<R> as_kform(const TwoFormFamily<R>& f) {
    f.validate();
    KFormFamily<R> out;
    out.k = 2;
    out.forms.resize(f.m_quadruplets);
    for (std::size_t q = 0; q < f.m_quadruplets; ++q) {
        out.forms[q] = {{f.vectors[4 * q], f.vectors[4 * q + 1]},
                        {f.vectors[4 * q + 2], f.vectors[4 * q + 3]}};
    }
    return out;
}

} // namespace extprod
