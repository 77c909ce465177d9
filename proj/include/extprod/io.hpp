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
 * @brief JSON file formats for matrices, families, k-forms, graphs, factors.
 *
 * Every document carries a "scalar" tag ("bigint", "rational", "modp",
 * "complex") plus an optional prime "p" for modp; graph files default to
 * bigint when the tag is absent. Entry encodings: bigint as decimal strings,
 * rationals as "a/b" strings, modp as nonnegative integers, complex as
 * [re, im] pairs. Exact values round-trip bit-exactly.
 */

#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "extprod/families.hpp"
#include "extprod/matrix.hpp"
#include "extprod/mixed_disc.hpp"
#include "extprod/reduction.hpp"
#include "extprod/scalar.hpp"

namespace extprod {

using AnyMatrix = std::variant<Matrix<BigInt>, Matrix<Rational>, Matrix<ModP>, Matrix<Cplx>>;
using AnyFamily = std::variant<TwoFormFamily<BigInt>, TwoFormFamily<Rational>, TwoFormFamily<ModP>,
                               TwoFormFamily<Cplx>>;
using AnyKForm = std::variant<KFormFamily<BigInt>, KFormFamily<Rational>, KFormFamily<ModP>,
                              KFormFamily<Cplx>>;
using AnyGraph = std::variant<TwoColorGraph<BigInt>, TwoColorGraph<Rational>, TwoColorGraph<ModP>>;
using AnyFactors =
    std::variant<Rank2Factors<BigInt>, Rank2Factors<Rational>, Rank2Factors<ModP>>;

AnyMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const AnyMatrix& m);

AnyFamily read_family_file(const std::string& path);
void write_family_file(const std::string& path, const AnyFamily& f);

AnyKForm read_kform_file(const std::string& path);
void write_kform_file(const std::string& path, const AnyKForm& f);

AnyGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const AnyGraph& g);

AnyFactors read_factors_file(const std::string& path);
void write_factors_file(const std::string& path, const AnyFactors& f);

/// Reads a matrix file that must hold a complex matrix.
Matrix<Cplx> read_unitary_file(const std::string& path);

/// Scalar kind of whatever a variant currently holds.
template <typename V>
ScalarKind variant_kind(const V& v) {
    return std::visit(
        [](const auto& x) {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, Matrix<BigInt>> || std::is_same_v<X, TwoFormFamily<BigInt>> ||
                          std::is_same_v<X, KFormFamily<BigInt>> || std::is_same_v<X, TwoColorGraph<BigInt>> ||
                          std::is_same_v<X, Rank2Factors<BigInt>>) {
                return ScalarKind::BigIntKind;
            } else if constexpr (std::is_same_v<X, Matrix<Rational>> ||
                                 std::is_same_v<X, TwoFormFamily<Rational>> ||
                                 std::is_same_v<X, KFormFamily<Rational>> ||
                                 std::is_same_v<X, TwoColorGraph<Rational>> ||
                                 std::is_same_v<X, Rank2Factors<Rational>>) {
                return ScalarKind::RationalKind;
            } else if constexpr (std::is_same_v<X, Matrix<ModP>> || std::is_same_v<X, TwoFormFamily<ModP>> ||
                                 std::is_same_v<X, KFormFamily<ModP>> ||
                                 std::is_same_v<X, TwoColorGraph<ModP>> ||
                                 std::is_same_v<X, Rank2Factors<ModP>>) {
                return ScalarKind::ModPKind;
            } else {
                return ScalarKind::ComplexKind;
            }
        },
        v);
}

} // namespace extprod
