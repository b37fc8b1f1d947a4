// Copyright 2026 The GORS Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GORS_MATRIX_H_
#define GORS_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace gors {

// Dense row-major n x n matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T{})
      : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t row, std::size_t col) {
    return cells_[row * n_ + col];
  }
  const T& operator()(std::size_t row, std::size_t col) const {
    return cells_[row * n_ + col];
  }

  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(cells_).subspan(r * n_, n_);
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
};

using StrengthMatrix = SquareMatrix<double>;

}  // namespace gors

#endif  // GORS_MATRIX_H_
