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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "extprod/errors.hpp"
#include "extprod/scalar.hpp"

namespace extprod {

/// A row vector is just its entries; dim = size().
template <typename R>
using RowVec = std::vector<R>;

/// Dense row-major matrix over a single scalar kind.
template <typename R>
class Matrix {
  public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    Matrix(std::size_t rows, std::size_t cols, const R& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    /// Builds from nested rows; all rows must have equal length.
    explicit Matrix(const std::vector<RowVec<R>>& rows) {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows.front().size();
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("Matrix: ragged rows");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::span<R> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
    std::span<const R> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

    std::vector<R>& data() { return a_; }
    const std::vector<R>& data() const { return a_; }

    void set_row(std::size_t i, std::span<const R> values) {
        for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = values[j];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

/// Max-norm of U^dagger U - I; cheap unitarity defect measure.
inline double unitarity_defect(const Matrix<Cplx>& u) {
    if (!u.square()) throw DimensionError("unitarity_defect: matrix not square");
    const std::size_t n = u.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) s += std::conj(u(k, i)) * u(k, j);
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

} // namespace extprod
