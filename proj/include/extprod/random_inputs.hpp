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
 * @brief Seed-deterministic random inputs for the verification suites.
 *
 * Entry derivation is fixed (one SeededRng draw per entry, row-major order)
 * so that every randomized check is reproducible from its 64-bit seed.
 */

#pragma once

#include <cstddef>
#include <cstdint>

#include "extprod/families.hpp"
#include "extprod/matrix.hpp"
#include "extprod/mixed_disc.hpp"
#include "extprod/reduction.hpp"
#include "extprod/rng.hpp"
#include "extprod/scalar.hpp"

namespace extprod {

inline Matrix<BigInt> random_bigint_matrix(std::size_t n, std::int64_t lo, std::int64_t hi,
                                           SeededRng& rng) {
    Matrix<BigInt> a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = BigInt(rng.uniform_int(lo, hi));
    }
    return a;
}

inline Matrix<ModP> random_modp_matrix(std::size_t n, std::int64_t lo, std::int64_t hi,
                                       std::uint64_t p, SeededRng& rng) {
    Matrix<ModP> a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = ModP::from_int(rng.uniform_int(lo, hi), p);
    }
    return a;
}

/// Entries num/den with num in [lo, hi], den in [1, max_den].
inline Matrix<Rational> random_rational_matrix(std::size_t n, std::int64_t lo, std::int64_t hi,
                                               std::int64_t max_den, SeededRng& rng) {
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const BigInt num(rng.uniform_int(lo, hi));
            const BigInt den(rng.uniform_int(1, max_den));
            a(i, j) = Rational(num, den);
        }
    }
    return a;
}

inline TwoFormFamily<BigInt> random_bigint_family(std::size_t m, std::int64_t lo, std::int64_t hi,
                                                  SeededRng& rng) {
    TwoFormFamily<BigInt> f;
    f.m_quadruplets = m;
    f.vectors.assign(4 * m, RowVec<BigInt>(2 * m));
    for (auto& v : f.vectors) {
        for (auto& x : v) x = BigInt(rng.uniform_int(lo, hi));
    }
    return f;
}

inline TwoFormFamily<ModP> random_modp_family(std::size_t m, std::int64_t lo, std::int64_t hi,
                                              std::uint64_t p, SeededRng& rng) {
    TwoFormFamily<ModP> f;
    f.m_quadruplets = m;
    f.vectors.assign(4 * m, RowVec<ModP>(2 * m));
    for (auto& v : f.vectors) {
        for (auto& x : v) x = ModP::from_int(rng.uniform_int(lo, hi), p);
    }
    return f;
}

inline TwoFormFamily<Cplx> random_complex_family(std::size_t m, SeededRng& rng) {
    TwoFormFamily<Cplx> f;
    f.m_quadruplets = m;
    f.vectors.assign(4 * m, RowVec<Cplx>(2 * m));
    for (auto& v : f.vectors) {
        for (auto& x : v) x = rng.complex_normal();
    }
    return f;
}

/// Random complex family whose first pair is (near-)degenerate: the second
/// row equals the first up to `eps` noise, so every subset choosing that pair
/// has a determinant near zero and the fast path must take its fallback.
inline TwoFormFamily<Cplx> near_singular_complex_family(std::size_t m, double eps,
                                                        SeededRng& rng) {
    TwoFormFamily<Cplx> f = random_complex_family(m, rng);
    for (std::size_t j = 0; j < f.dim(); ++j) {
        f.vectors[1][j] = f.vectors[0][j] + eps * rng.complex_normal();
    }
    return f;
}

inline TwoColorGraph<BigInt> random_bigint_graph(std::size_t m, std::int64_t lo, std::int64_t hi,
                                                 SeededRng& rng) {
    TwoColorGraph<BigInt> g;
    g.n_pairs = m;
    g.color1.assign(2 * m, RowVec<BigInt>(2 * m));
    g.color2.assign(2 * m, RowVec<BigInt>(2 * m));
    for (auto* rows : {&g.color1, &g.color2}) {
        for (auto& r : *rows) {
            for (auto& x : r) x = BigInt(rng.uniform_int(lo, hi));
        }
    }
    return g;
}

inline Rank2Factors<BigInt> random_bigint_factors(std::size_t m, std::int64_t lo, std::int64_t hi,
                                                  SeededRng& rng) {
    Rank2Factors<BigInt> f;
    f.m = m;
    f.x0.assign(m, RowVec<BigInt>(m));
    f.x1.assign(m, RowVec<BigInt>(m));
    for (auto* side : {&f.x0, &f.x1}) {
        for (auto& v : *side) {
            for (auto& x : v) x = BigInt(rng.uniform_int(lo, hi));
        }
    }
    return f;
}

} // namespace extprod
