// Copyright 2026 The Lance Authors. All rights reserved.
//
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

#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace lance {

// Small dense row-major matrix. Dimensions are runtime values so the same
// type serves 4x4 transform blocks, 3x3 filters and batched GEMM operands.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    assert(rows >= 0 && cols >= 0);
  }

  Matrix(std::initializer_list<std::initializer_list<T>> init)
      : rows_(static_cast<int>(init.size())) {
    cols_ = rows_ > 0 ? static_cast<int>(init.begin()->size()) : 0;
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
      assert(static_cast<int>(row.size()) == cols_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const T& at(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  void fill(T value) { data_.assign(data_.size(), value); }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using MatF = Matrix<float>;

inline MatF matmul(const MatF& a, const MatF& b) {
  assert(a.cols() == b.rows());
  MatF out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const float av = a.at(i, k);
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += av * b.at(k, j);
    }
  return out;
}

inline MatF transpose(const MatF& a) {
  MatF out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

inline MatF hadamard(const MatF& a, const MatF& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  MatF out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) * b.at(i, j);
  return out;
}

}  // namespace lance
