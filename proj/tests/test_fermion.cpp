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

#include <cmath>
#include <complex>
#include <cstddef>

#include "doctest.h"

#include "extprod/errors.hpp"
#include "extprod/fermion.hpp"
#include "extprod/rng.hpp"

using namespace extprod;

namespace {

ScatteringProblem identity_problem(std::size_t m) {
    ScatteringProblem p;
    p.m_quadruplets = m;
    p.unitary = Matrix<Cplx>(4 * m, 4 * m, Cplx(0.0, 0.0));
    for (std::size_t i = 0; i < 4 * m; ++i) p.unitary(i, i) = Cplx(1.0, 0.0);
    return p;
}

} // namespace

TEST_CASE("identity scattering reproduces the prepared superposition") {
    for (std::size_t m = 1; m <= 2; ++m) {
        const auto p = identity_problem(m);
        // First pair of every quadruplet occupied: one branch of the state.
        OutputConfig first;
        OutputConfig second;
        for (std::size_t q = 0; q < m; ++q) {
            first.push_back(4 * q);
            first.push_back(4 * q + 1);
            second.push_back(4 * q + 2);
            second.push_back(4 * q + 3);
        }
        const double want = std::pow(2.0, -0.5 * static_cast<double>(m));
        CHECK(std::abs(amplitude_d22(p, first) - Cplx(want, 0.0)) <= 1e-12);
        CHECK(std::abs(amplitude_d22(p, second) - Cplx(want, 0.0)) <= 1e-12);

        // A mixed configuration is orthogonal to both branches.
        OutputConfig mixed = first;
        mixed[1] = 4 * 0 + 2;
        std::sort(mixed.begin(), mixed.end());
        CHECK(std::abs(amplitude_d22(p, mixed)) <= 1e-12);
    }
}

TEST_CASE("identity distribution is uniform over the branch pair") {
    const auto p = identity_problem(1);
    const auto dist = output_distribution(p);
    REQUIRE(dist.size() == 6);
    double total = 0.0;
    for (const auto& e : dist) {
        total += e.probability;
        const bool branch = (e.config == OutputConfig{0, 1}) || (e.config == OutputConfig{2, 3});
        CHECK(e.probability == doctest::Approx(branch ? 0.5 : 0.0).epsilon(1e-12));
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exterior amplitude matches the state-vector oracle") {
    for (std::size_t m = 1; m <= 2; ++m) {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const auto p = random_scattering_problem(m, seed);
            for (const auto& e : output_distribution(p)) {
                const Cplx want = amplitude_fock(p, e.config);
                CAPTURE(m);
                CAPTURE(seed);
                CHECK(std::abs(e.amplitude - want) <= 1e-10);
            }
        }
    }
}

TEST_CASE("output probabilities sum to one") {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::uint64_t seed = 11; seed <= 13; ++seed) {
            const auto p = random_scattering_problem(m, seed);
            double total = 0.0;
            for (const auto& e : output_distribution(p)) total += e.probability;
            CAPTURE(m);
            CHECK(std::abs(total - 1.0) <= 1e-8);
        }
    }
}

TEST_CASE("probabilities are invariant under a global phase") {
    const auto p = random_scattering_problem(2, 77);
    auto q = p;
    const Cplx phase = std::polar(1.0, 0.7071);
    for (std::size_t i = 0; i < q.unitary.rows(); ++i) {
        for (std::size_t j = 0; j < q.unitary.cols(); ++j) q.unitary(i, j) *= phase;
    }
    const auto dp = output_distribution(p);
    const auto dq = output_distribution(q);
    REQUIRE(dp.size() == dq.size());
    for (std::size_t i = 0; i < dp.size(); ++i) {
        CHECK(std::abs(dp[i].probability - dq[i].probability) <= 1e-10);
    }
}

TEST_CASE("channel swap relabels the distribution") {
    // Swapping channels 0 and 2 inside quadruplet 0 of the identity swaps the
    // two branches, leaving the branch probabilities in place.
    auto p = identity_problem(1);
    std::swap(p.unitary(0, 0), p.unitary(0, 2));
    std::swap(p.unitary(2, 2), p.unitary(2, 0));
    const auto dist = output_distribution(p);
    for (const auto& e : dist) {
        const bool branch = (e.config == OutputConfig{1, 2}) || (e.config == OutputConfig{0, 3});
        CHECK(e.probability == doctest::Approx(branch ? 0.5 : 0.0).epsilon(1e-12));
    }
}

TEST_CASE("Haar sampling is deterministic and unitary") {
    const auto u1 = haar_unitary(8, 123);
    const auto u2 = haar_unitary(8, 123);
    const auto u3 = haar_unitary(8, 124);
    bool identical = true;
    bool different = false;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            identical = identical && u1(i, j) == u2(i, j);
            different = different || u1(i, j) != u3(i, j);
        }
    }
    CHECK(identical);
    CHECK(different);
    CHECK(unitarity_defect(u1) <= 1e-12);

    const auto tiny = haar_unitary(1, 5);
    CHECK(std::abs(std::abs(tiny(0, 0)) - 1.0) <= 1e-12);
}

TEST_CASE("distribution ordering and parallel equivalence") {
    const auto p = random_scattering_problem(2, 31);
    const auto serial = output_distribution(p, 1);
    const auto threaded = output_distribution(p, 3);
    REQUIRE(serial.size() == 70);
    REQUIRE(threaded.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].config == threaded[i].config);
        CHECK(serial[i].amplitude == threaded[i].amplitude);
        if (i > 0) CHECK(serial[i - 1].config < serial[i].config);
    }
}

TEST_CASE("fermion guards and validation") {
    const auto p3 = random_scattering_problem(3, 9);
    OutputConfig c6{0, 1, 2, 3, 4, 5};
    CHECK_THROWS_AS((void)amplitude_fock(p3, c6), SizeGuardError);

    auto bad = identity_problem(1);
    bad.unitary(0, 0) = Cplx(0.5, 0.0);
    CHECK_THROWS_AS((void)amplitude_d22(bad, OutputConfig{0, 1}), Error);

    const auto p1 = identity_problem(1);
    CHECK_THROWS_AS((void)amplitude_d22(p1, OutputConfig{0}), DimensionError);
    CHECK_THROWS_AS((void)amplitude_d22(p1, OutputConfig{1, 0}), DimensionError);
    CHECK_THROWS_AS((void)amplitude_d22(p1, OutputConfig{0, 9}), DimensionError);

    const auto p6 = random_scattering_problem(6, 10);
    CHECK_THROWS_AS((void)output_distribution(p6), SizeGuardError);
}
