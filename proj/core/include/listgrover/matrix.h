// Copyright 2026 The listgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LISTGROVER_MATRIX_H
#define LISTGROVER_MATRIX_H

#include <complex>
#include <cstddef>
#include <vector>

namespace listgrover {

using Complex = std::complex<double>;

/// Square dense complex matrix, row-major.
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static Matrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    const std::vector<Complex> &data() const { return data_; }

    Matrix adjoint() const;
    Matrix operator*(const Matrix &rhs) const;

    /// Largest entrywise |a - b|.
    double max_abs_diff(const Matrix &other) const;
    bool is_unitary(double tol = 1e-10) const;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

}  // namespace listgrover

#endif
