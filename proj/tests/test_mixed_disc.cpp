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

#include <cstddef>
#include <vector>

#include "doctest.h"

#include "extprod/d22.hpp"
#include "extprod/det.hpp"
#include "extprod/errors.hpp"
#include "extprod/mixed_disc.hpp"
#include "extprod/random_inputs.hpp"
#include "extprod/rng.hpp"
#include "support/oracles.hpp"

using namespace extprod;
namespace et = extprod::testing;

namespace {

std::vector<Matrix<BigInt>> random_matrices(std::size_t m, SeededRng& rng) {
    std::vector<Matrix<BigInt>> out;
    for (std::size_t i = 0; i < m; ++i) out.push_back(random_bigint_matrix(m, -4, 4, rng));
    return out;
}

} // namespace

TEST_CASE("mixed discriminant: pinned small cases") {
    // M = 1 is the sole entry.
    std::vector<Matrix<BigInt>> one{Matrix<BigInt>(1, 1, BigInt(9))};
    CHECK(mixed_discriminant(one) == BigInt(9));

    // M = 2 with I and 2I: both bijections contribute det(diag(1, 2)) = 2.
    Matrix<BigInt> id(2, 2, BigInt(0)), two(2, 2, BigInt(0));
    for (std::size_t i = 0; i < 2; ++i) {
        id(i, i) = 1;
        two(i, i) = 2;
    }
    CHECK(mixed_discriminant(std::vector<Matrix<BigInt>>{id, two}) == BigInt(4));
}

TEST_CASE("mixed discriminant of M equal arguments is M! times the determinant") {
    SeededRng rng(51);
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto a = random_bigint_matrix(m, -4, 4, rng);
        std::vector<Matrix<BigInt>> args(m, a);
        BigInt fact(1);
        for (std::size_t i = 2; i <= m; ++i) fact *= BigInt(i);
        CHECK(mixed_discriminant(args) == BigInt(fact * det(a)));
    }
}

TEST_CASE("mixed discriminant is symmetric and linear in each slot") {
    SeededRng rng(52);
    for (int t = 0; t < 8; ++t) {
        auto args = random_matrices(3, rng);
        const BigInt base = mixed_discriminant(args);

        auto perm = args;
        std::swap(perm[0], perm[2]);
        CHECK(mixed_discriminant(perm) == base);

        const auto b = random_bigint_matrix(3, -4, 4, rng);
        auto shifted = args;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                shifted[1](i, j) = BigInt(args[1](i, j) + b(i, j));
            }
        }
        auto swapped_in = args;
        swapped_in[1] = b;
        CHECK(mixed_discriminant(shifted) == BigInt(base + mixed_discriminant(swapped_in)));
    }
}

TEST_CASE("rank-2 assembly: A_i = x0 x0^T + x1 x1^T") {
    Rank2Factors<BigInt> fac;
    fac.m = 2;
    fac.x0 = {{BigInt(1), BigInt(0)}, {BigInt(1), BigInt(1)}};
    fac.x1 = {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(-1)}};
    const auto mats = assemble_rank2(fac);
    REQUIRE(mats.size() == 2);
    CHECK(mats[0](0, 0) == BigInt(1));
    CHECK(mats[0](0, 1) == BigInt(0));
    CHECK(mats[0](1, 1) == BigInt(1));
    CHECK(mats[1](0, 0) == BigInt(2));
    CHECK(mats[1](0, 1) == BigInt(0));
    CHECK(mats[1](1, 0) == BigInt(0));
    CHECK(mats[1](1, 1) == BigInt(2));
}

TEST_CASE("identity between the mixed discriminant and the signed exterior value") {
    // Pinned M = 2 case: lhs 4, raw exterior value -4, sign (-1)^{2*1/2}.
    Rank2Factors<BigInt> fac;
    fac.m = 2;
    fac.x0 = {{BigInt(1), BigInt(0)}, {BigInt(1), BigInt(1)}};
    fac.x1 = {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(-1)}};
    const auto mv = verify_md_identity(fac);
    CHECK(mv.lhs == BigInt(4));
    CHECK(mv.rhs == BigInt(4));
    CHECK(mv.equal);
    CHECK(d22_subset_sum(embed_rank2(fac)) == BigInt(-4));

    SeededRng rng(53);
    for (int t = 0; t < 40; ++t) {
        const std::size_t m = 1 + static_cast<std::size_t>(t % 5);
        const auto f = random_bigint_factors(m, -4, 4, rng);
        const auto v = verify_md_identity(f);
        CAPTURE(m);
        CHECK(v.equal);
    }
}

TEST_CASE("embedding a single rank-2 factor gives the two 1x1 determinants") {
    Rank2Factors<BigInt> fac;
    fac.m = 1;
    fac.x0 = {{BigInt(3)}};
    fac.x1 = {{BigInt(5)}};
    // The embedded family in dimension 2 evaluates to a^2 + b^2.
    CHECK(d22_subset_sum(embed_rank2(fac)) == BigInt(34));
    CHECK(mixed_discriminant(assemble_rank2(fac)) == BigInt(34));
}

TEST_CASE("zero factors give a zero mixed discriminant") {
    Rank2Factors<BigInt> fac;
    fac.m = 2;
    fac.x0 = {{BigInt(0), BigInt(0)}, {BigInt(1), BigInt(2)}};
    fac.x1 = {{BigInt(0), BigInt(0)}, {BigInt(3), BigInt(4)}};
    CHECK(mixed_discriminant(assemble_rank2(fac)) == BigInt(0));
    CHECK(verify_md_identity(fac).equal);
}

TEST_CASE("mixed-discriminant guards") {
    std::vector<Matrix<BigInt>> too_many(9, Matrix<BigInt>(9, 9, BigInt(0)));
    CHECK_THROWS_AS((void)mixed_discriminant(too_many), SizeGuardError);

    SeededRng rng(54);
    const auto f7 = random_bigint_factors(7, -2, 2, rng);
    CHECK_THROWS_AS((void)verify_md_identity(f7), SizeGuardError);

    std::vector<Matrix<BigInt>> ragged{Matrix<BigInt>(2, 2, BigInt(1)),
                                       Matrix<BigInt>(3, 3, BigInt(1))};
    CHECK_THROWS_AS((void)mixed_discriminant(ragged), DimensionError);

    Rank2Factors<BigInt> bad;
    bad.m = 2;
    bad.x0 = {{BigInt(1), BigInt(0)}};
    bad.x1 = {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}};
    CHECK_THROWS_AS((void)assemble_rank2(bad), DimensionError);
}
