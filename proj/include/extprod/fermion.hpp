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
 * @brief Scattering amplitudes of pairwise-entangled noninteracting fermions.
 *
 * 2M fermions enter 4M channels in M quadruplets, each prepared in
 * (|1100> + |0011>)/sqrt(2) over its four channels, and scatter through a
 * unitary U (rows = input channels, columns = output channels). The amplitude
 * of an output configuration is 2^{-M/2} times the D_{2,2} of the U rows
 * restricted to the output columns. amplitude_fock recomputes the same
 * amplitude from the 2^n occupation basis and per-configuration Slater
 * determinants, as an independent oracle for the normalization and signs.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "extprod/d22.hpp"
#include "extprod/det.hpp"
#include "extprod/errors.hpp"
#include "extprod/families.hpp"
#include "extprod/matrix.hpp"
#include "extprod/parallel.hpp"
#include "extprod/rng.hpp"
#include "extprod/scalar.hpp"

namespace extprod {

inline constexpr double kUnitarityTol = 1e-10;
inline constexpr std::size_t kFockMaxQuadruplets = 2;
inline constexpr std::uint64_t kDistributionConfigCap = 1'000'000;

/// Output occupation: strictly increasing 0-based channel indices, 2M of them.
using OutputConfig = std::vector<std::size_t>;

/// A 4M-channel unitary with quadruplet q on input channels 4q .. 4q+3.
struct ScatteringProblem {
    std::size_t m_quadruplets = 0;
    Matrix<Cplx> unitary;

    std::size_t channels() const { return 4 * m_quadruplets; }

    void validate() const {
        if (m_quadruplets == 0) throw DimensionError("ScatteringProblem: M must be >= 1");
        if (!unitary.square() || unitary.rows() != channels()) {
            throw DimensionError("ScatteringProblem: unitary must be 4M x 4M");
        }
        if (unitarity_defect(unitary) >= kUnitarityTol) {
            throw Error("ScatteringProblem: matrix is not unitary within 1e-10");
        }
    }

    void check_config(const OutputConfig& out) const {
        if (out.size() != 2 * m_quadruplets) {
            throw DimensionError("OutputConfig: expected 2M channels");
        }
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i] >= channels() || (i > 0 && out[i] <= out[i - 1])) {
                throw DimensionError("OutputConfig: channels must be strictly increasing in range");
            }
        }
    }
};

namespace detail {

/// U rows restricted to the output columns, grouped into quadruplets.
inline TwoFormFamily<Cplx> restricted_family(const ScatteringProblem& p, const OutputConfig& out) {
    const std::size_t n = p.channels();
    TwoFormFamily<Cplx> f;
    f.m_quadruplets = p.m_quadruplets;
    f.vectors.assign(n, RowVec<Cplx>(out.size()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < out.size(); ++j) f.vectors[i][j] = p.unitary(i, out[j]);
    }
    return f;
}

inline Cplx amplitude_d22_unchecked(const ScatteringProblem& p, const OutputConfig& out) {
    const Cplx d = d22_subset_sum(restricted_family(p, out));
    return std::pow(2.0, -0.5 * static_cast<double>(p.m_quadruplets)) * d;
}

} // namespace detail

/// Amplitude of the output configuration via the D_{2,2} route.
inline Cplx amplitude_d22(const ScatteringProblem& p, const OutputConfig& out) {
    p.validate();
    p.check_config(out);
    return detail::amplitude_d22_unchecked(p, out);
}

/**
 * @brief Amplitude via the full 2^n occupation basis; guarded at M <= 2.
 *
 * The input state assigns coefficient 2^{-M/2} to each of the 2^M choice
 * masks; the sign is +1 because the creation-operator string is in ascending
 * channel order for every choice. Each input configuration I feeds the output
 * through the Slater rule amp(I -> J) = det U[I, J].
 */
inline Cplx amplitude_fock(const ScatteringProblem& p, const OutputConfig& out) {
    p.validate();
    p.check_config(out);
    const std::size_t m = p.m_quadruplets;
    if (m > kFockMaxQuadruplets) throw SizeGuardError("amplitude_fock: M exceeds guard of 2");
    const std::size_t n = p.channels();

    std::vector<Cplx> psi(std::size_t{1} << n, Cplx(0.0, 0.0));
    const double coeff = std::pow(2.0, -0.5 * static_cast<double>(m));
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << m); ++choice) {
        std::uint64_t mask = 0;
        for (std::size_t q = 0; q < m; ++q) {
            const std::size_t lo = 4 * q + (((choice >> q) & 1u) ? 2 : 0);
            mask |= std::uint64_t{3} << lo;
        }
        psi[mask] = Cplx(coeff, 0.0);
    }

    Cplx amp(0.0, 0.0);
    Matrix<Cplx> sub(out.size(), out.size());
    for (std::uint64_t mask = 0; mask < psi.size(); ++mask) {
        const Cplx& c = psi[mask];
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        std::size_t r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!((mask >> i) & 1u)) continue;
            for (std::size_t j = 0; j < out.size(); ++j) sub(r, j) = p.unitary(i, out[j]);
            ++r;
        }
        amp += c * det_inplace(sub);
    }
    return amp;
}

struct DistributionEntry {
    OutputConfig config;
    Cplx amplitude;
    double probability;
};

/**
 * @brief Amplitude and probability for every output configuration.
 *
 * Configurations are emitted in lexicographic order regardless of the thread
 * count. Guarded by C(4M, 2M) <= 10^6.
 */
inline std::vector<DistributionEntry> output_distribution(const ScatteringProblem& p,
                                                          unsigned threads = 1) {
    p.validate();
    const std::size_t n = p.channels();
    const std::size_t k = 2 * p.m_quadruplets;

    std::uint64_t count = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        count = count * (n - k + i) / i;
        if (count > kDistributionConfigCap) {
            throw SizeGuardError("output_distribution: C(4M, 2M) exceeds guard of 10^6");
        }
    }

    std::vector<OutputConfig> configs;
    configs.reserve(static_cast<std::size_t>(count));
    OutputConfig cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        configs.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }

    std::vector<DistributionEntry> out(configs.size());
    const auto ranges = block_ranges(configs.size(), resolve_threads(threads));
    run_blocks(ranges, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const Cplx a = detail::amplitude_d22_unchecked(p, configs[i]);
            out[i] = {std::move(configs[i]), a, std::norm(a)};
        }
    });
    return out;
}

/**
 * @brief Deterministic Haar-random unitary.
 *
 * Fills an n x n matrix with complex standard normals in row-major order from
 * SeededRng(seed), then orthonormalizes the columns by modified Gram-Schmidt
 * (two passes). Gram-Schmidt produces the QR factor with real positive
 * triangular diagonal, which is exactly the phase fix that makes Q Haar.
 */
inline Matrix<Cplx> haar_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw DimensionError("haar_unitary: n must be >= 1");
    SeededRng rng(seed);
    Matrix<Cplx> u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) u(i, j) = rng.complex_normal();
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                Cplx proj(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(u(i, j)) * u(i, k);
                for (std::size_t i = 0; i < n; ++i) u(i, k) -= proj * u(i, j);
            }
        }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm2 += std::norm(u(i, k));
        if (norm2 == 0.0) throw Error("haar_unitary: degenerate Gaussian sample");
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < n; ++i) u(i, k) *= inv;
    }
    return u;
}

/// Problem with a Haar unitary drawn from the seed (convenience for CLI/tests).
inline ScatteringProblem random_scattering_problem(std::size_t m, std::uint64_t seed) {
    ScatteringProblem p;
    p.m_quadruplets = m;
    p.unitary = haar_unitary(4 * m, seed);
    return p;
}

} // namespace extprod
