/*
   Copyright 2026 The discres Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DISCRES_MATRIX_HPP
#define DISCRES_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "discres/poly.hpp"

namespace discres {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Determinant over Q[vars]. Variables in which the matrix is row/column
// scalable (every entry a monomial multiple v^(r_i + c_j) of a v-free
// polynomial) are factored out first; what remains goes through
// fraction-free Bareiss elimination, or evaluation/interpolation when the
// entries involve a single variable.
Poly determinant(Matrix<Poly> m);
// Fraction-free Bareiss elimination only (no scaling, no interpolation).
Poly determinant_bareiss(Matrix<Poly> m);
// Evaluation at deg+1 integer points and Newton interpolation; entries must
// involve at most one variable.
Poly determinant_interpolation(const Matrix<Poly>& m);

Rational determinant(const Matrix<Rational>& m);
Integer determinant_bareiss(Matrix<Integer> m);
// Chinese remaindering over word primes up to the Hadamard bound.
Integer determinant_modular(const Matrix<Integer>& m);

}  // namespace discres

#endif  // DISCRES_MATRIX_HPP
