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
 * @brief Determinants over all supported scalar kinds.
 *
 * Exact kinds never leave their ring: BigInt uses fraction-free Bareiss
 * elimination (intermediates stay integral), Rational and ModP use Gaussian
 * elimination with exact division. Complex matrices go through partially
 * pivoted LU. The exact path first peels off rows/columns with a single
 * nonzero entry (cofactor steps), which collapses the very sparse matrices
 * produced by the permanent reduction to a small dense core.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "extprod/errors.hpp"
#include "extprod/matrix.hpp"
#include "extprod/scalar.hpp"

namespace extprod {

namespace detail {

template <typename R>
void swap_rows(Matrix<R>& m, std::size_t a, std::size_t b) {
    const std::size_t n = m.cols();
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
}

/// Fraction-free Bareiss; destroys m. Requires an integral domain with exact
/// division of the Sylvester-identity quotients.
template <typename R>
R det_bareiss(Matrix<R>& m) {
    using T = ring_traits<R>;
    const std::size_t n = m.rows();
    bool negate = false;
    R prev = T::one_like(m(0, 0));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && T::is_zero(m(piv, k))) ++piv;
        if (piv == n) return T::zero_like(m(0, 0));
        if (piv != k) {
            swap_rows(m, piv, k);
            negate = !negate;
        }
        const R pivot = m(k, k);
        const bool divide = !(k == 0) && !(prev == T::one_like(prev));
        for (std::size_t i = k + 1; i < n; ++i) {
            const R lower = m(i, k);
            if (T::is_zero(lower)) {
                if (divide) {
                    for (std::size_t j = k + 1; j < n; ++j) {
                        if (!T::is_zero(m(i, j))) m(i, j) = T::div_exact(pivot * m(i, j), prev);
                    }
                } else {
                    for (std::size_t j = k + 1; j < n; ++j) {
                        if (!T::is_zero(m(i, j))) m(i, j) = pivot * m(i, j);
                    }
                }
                continue;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                const bool zij = T::is_zero(m(i, j));
                const bool zkj = T::is_zero(m(k, j));
                if (zij && zkj) continue;
                R num;
                if (zij) {
                    num = -(lower * m(k, j));
                } else if (zkj) {
                    num = pivot * m(i, j);
                } else {
                    num = pivot * m(i, j) - lower * m(k, j);
                }
                if (divide) {
                    m(i, j) = T::div_exact(std::move(num), prev);
                } else {
                    m(i, j) = std::move(num);
                }
            }
        }
        prev = pivot;
    }
    R d = m(n - 1, n - 1);
    return negate ? R(-d) : d;
}

/// Gaussian elimination with exact division; destroys m. For field scalars.
template <typename R>
R det_gauss(Matrix<R>& m) {
    using T = ring_traits<R>;
    const std::size_t n = m.rows();
    bool negate = false;
    R acc = T::one_like(m(0, 0));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && T::is_zero(m(piv, k))) ++piv;
        if (piv == n) return T::zero_like(m(0, 0));
        if (piv != k) {
            swap_rows(m, piv, k);
            negate = !negate;
        }
        const R pivot = m(k, k);
        acc *= pivot;
        if (k + 1 == n) break;
        const R inv = T::div_exact(T::one_like(pivot), pivot);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (T::is_zero(m(i, k))) continue;
            const R f = m(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (!T::is_zero(m(k, j))) m(i, j) -= f * m(k, j);
            }
        }
    }
    return negate ? R(-acc) : acc;
}

/// Partially pivoted LU determinant; destroys m.
inline Cplx det_lu(Matrix<Cplx>& m) {
    const std::size_t n = m.rows();
    bool negate = false;
    Cplx acc(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double a = std::abs(m(i, k));
            if (a > best) {
                best = a;
                piv = i;
            }
        }
        if (best == 0.0) return Cplx(0.0, 0.0);
        if (piv != k) {
            swap_rows(m, piv, k);
            negate = !negate;
        }
        acc *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Cplx f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return negate ? -acc : acc;
}

/// Exact-kind determinant: singleton elimination, then dense elimination on
/// whatever core is left. Destroys m.
template <typename R>
R det_exact(Matrix<R>& m) {
    using T = ring_traits<R>;
    const std::size_t n = m.rows();
    const R zero = T::zero_like(m(0, 0));

    std::vector<char> row_alive(n, 1), col_alive(n, 1);
    std::vector<std::size_t> row_nnz(n, 0), col_nnz(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!T::is_zero(m(i, j))) {
                ++row_nnz[i];
                ++col_nnz[j];
            }
        }
    }

    R acc = T::one_like(m(0, 0));
    bool negate = false;
    std::size_t alive = n;

    auto alive_pos = [&](const std::vector<char>& mask, std::size_t idx) {
        std::size_t pos = 0;
        for (std::size_t t = 0; t < idx; ++t) pos += mask[t];
        return pos;
    };

    bool progress = true;
    while (alive > 0 && progress) {
        progress = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (row_alive[i] && row_nnz[i] == 0) return zero;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (col_alive[j] && col_nnz[j] == 0) return zero;
        }
        std::size_t si = n, sj = n;
        for (std::size_t i = 0; i < n && si == n; ++i) {
            if (row_alive[i] && row_nnz[i] == 1) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (col_alive[j] && !T::is_zero(m(i, j))) {
                        si = i;
                        sj = j;
                        break;
                    }
                }
            }
        }
        if (si == n) {
            for (std::size_t j = 0; j < n && sj == n; ++j) {
                if (col_alive[j] && col_nnz[j] == 1) {
                    for (std::size_t i = 0; i < n; ++i) {
                        if (row_alive[i] && !T::is_zero(m(i, j))) {
                            si = i;
                            sj = j;
                            break;
                        }
                    }
                }
            }
        }
        if (si == n) break;

        acc *= m(si, sj);
        negate ^= ((alive_pos(row_alive, si) + alive_pos(col_alive, sj)) & 1) != 0;
        row_alive[si] = 0;
        col_alive[sj] = 0;
        --alive;
        for (std::size_t i = 0; i < n; ++i) {
            if (row_alive[i] && !T::is_zero(m(i, sj))) --row_nnz[i];
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (col_alive[j] && !T::is_zero(m(si, j))) --col_nnz[j];
        }
        progress = true;
    }

    if (alive > 0) {
        Matrix<R> core(alive, alive, zero);
        std::size_t ci = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!row_alive[i]) continue;
            std::size_t cj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!col_alive[j]) continue;
                core(ci, cj) = std::move(m(i, j));
                ++cj;
            }
            ++ci;
        }
        R core_det = [&] {
            if constexpr (ring_traits<R>::is_field) {
                return det_gauss(core);
            } else {
                return det_bareiss(core);
            }
        }();
        acc *= core_det;
    }
    return negate ? R(-acc) : acc;
}

} // namespace detail

/// Determinant; destroys the argument (hot-path variant).
template <typename R>
R det_inplace(Matrix<R>& m) {
    if (!m.square()) throw DimensionError("det: matrix must be square");
    if (m.rows() == 0) throw DimensionError("det: empty matrix");
    if constexpr (std::is_same_v<R, Cplx>) {
        return detail::det_lu(m);
    } else {
        return detail::det_exact(m);
    }
}

/// Determinant of a square matrix.
template <typename R>
R det(const Matrix<R>& m) {
    Matrix<R> scratch = m;
    return det_inplace(scratch);
}

} // namespace extprod
