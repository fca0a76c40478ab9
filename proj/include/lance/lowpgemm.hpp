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

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lance/matrix.hpp"
#include "lance/quant.hpp"

namespace lance {

// Depth bound keeping |sum| <= K * 255^2 inside int32.
inline constexpr int kMaxAccumDepth = 32768;

// Unsigned 8-bit codes with the affine parameters they were quantized under.
struct CodeMatrix {
  int rows = 0, cols = 0;
  std::vector<std::uint8_t> codes;
  QuantParams params;

  std::uint8_t at(int r, int c) const {
    return codes[std::size_t(r) * cols + c];
  }
};

// Widening int32 accumulator matrix.
struct AccMatrix {
  int rows = 0, cols = 0;
  std::vector<std::int32_t> sums;

  std::int32_t at(int r, int c) const {
    return sums[std::size_t(r) * cols + c];
  }
};

// ---------------------------------------------------------------------------
// Multiply instrumentation. Counts scalar multiplies executed in the product
// stage (Hadamard / GEMM / direct correlation); transform-stage adds and
// dequantization scaling are excluded from the count. Bulk-flushed from hot
// loops, so counts stay exact under row-parallel execution.

namespace detail {
inline std::atomic<std::uint64_t> g_multiply_count{0};
}

inline void reset_multiply_count() {
  detail::g_multiply_count.store(0, std::memory_order_relaxed);
}

inline std::uint64_t multiply_count() {
  return detail::g_multiply_count.load(std::memory_order_relaxed);
}

inline void add_multiplies(std::uint64_t n) {
  detail::g_multiply_count.fetch_add(n, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------

// Exact integer GEMM: sums[i][j] = sum_k a[i][k] * b[k][j].
inline AccMatrix gemm_codes(const CodeMatrix& a, const CodeMatrix& b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("gemm_codes: inner dimensions differ");
  if (a.cols > kMaxAccumDepth)
    throw std::invalid_argument("gemm_codes: depth exceeds int32 accumulation bound");

  AccMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.sums.assign(std::size_t(a.rows) * b.cols, 0);
  std::uint64_t muls = 0;
  for (int i = 0; i < a.rows; ++i) {
    std::int32_t* orow = out.sums.data() + std::size_t(i) * b.cols;
    for (int k = 0; k < a.cols; ++k) {
      const std::int32_t av = a.at(i, k);
      const std::uint8_t* brow = b.codes.data() + std::size_t(k) * b.cols;
      for (int j = 0; j < b.cols; ++j) {
        orow[j] += av * std::int32_t(brow[j]);
        ++muls;
      }
    }
  }
  add_multiplies(muls);
  return out;
}

// De-quantized value of one inner product of codes. With code vectors a, b
// of length `depth` and affine values (code * scale + t_min):
//
//   sum_k (a_k s_a + o_a)(b_k s_b + o_b)
//     = s_a s_b dot + s_a o_b sum(a) + s_b o_a sum(b) + depth o_a o_b
//
// Shared by the batched GEMM path and the per-channel engines so that both
// evaluate bit-identical expressions.
inline float affine_term(std::int32_t dot, std::int32_t a_sum, std::int32_t b_sum,
                         int depth, const QuantParams& pa, const QuantParams& pb) {
  return pa.scale * pb.scale * float(dot) + pa.scale * pb.t_min * float(a_sum) +
         pb.scale * pa.t_min * float(b_sum) + float(depth) * pa.t_min * pb.t_min;
}

// Integer GEMM plus zero-point correction; algebraically equal to the float
// GEMM of the de-quantized operands.
inline Matrix<float> affine_gemm(const CodeMatrix& a, const CodeMatrix& b) {
  const AccMatrix dot = gemm_codes(a, b);

  std::vector<std::int32_t> a_row_sum(a.rows, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) a_row_sum[i] += a.at(i, k);
  std::vector<std::int32_t> b_col_sum(b.cols, 0);
  for (int k = 0; k < b.rows; ++k)
    for (int j = 0; j < b.cols; ++j) b_col_sum[j] += b.at(k, j);

  Matrix<float> out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      out.at(i, j) = affine_term(dot.at(i, j), a_row_sum[i], b_col_sum[j],
                                 a.cols, a.params, b.params);
  return out;
}

}  // namespace lance
