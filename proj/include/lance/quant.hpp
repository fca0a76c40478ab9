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

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace lance {

// Uniform linear (affine) quantization over [t_min, t_max] with 2^bits
// levels. Codes are unsigned and stored one per byte for every bit-width.
struct QuantParams {
  int bits = 8;
  float t_min = 0.0f;
  float t_max = 0.0f;
  float scale = 0.0f;  // (t_max - t_min) / (2^bits - 1); 0 iff t_max == t_min

  // Top code value, 2^bits - 1.
  int max_code() const { return (1 << bits) - 1; }

  bool operator==(const QuantParams&) const = default;
};

// Scope over which one scale/offset pair is fit.
//   PerTile     - one pair per transformed 4x4 tile or filter-channel block
//   PerPosition - one pair per transform-domain position (i, j), shared
//                 across tiles and channels; required for batched GEMM
//   PerTensor   - one pair for the whole domain tensor
enum class Granularity { PerTile, PerPosition, PerTensor };

inline const char* to_string(Granularity g) {
  switch (g) {
    case Granularity::PerTile: return "tile";
    case Granularity::PerPosition: return "position";
    default: return "tensor";
  }
}

inline QuantParams fit_params(std::span<const float> values, int bits) {
  if (bits < 2 || bits > 8)
    throw std::invalid_argument("fit_params: bits must be in [2, 8]");
  if (values.empty())
    throw std::invalid_argument("fit_params: empty value set");
  float lo = values[0];
  float hi = values[0];
  for (float v : values) {
    if (std::isnan(v)) throw std::invalid_argument("fit_params: NaN in values");
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  QuantParams p;
  p.bits = bits;
  p.t_min = lo;
  p.t_max = hi;
  p.scale = (hi - lo) / static_cast<float>(p.max_code());
  return p;
}

// Total function: out-of-range x clamps to the nearest valid code and a
// degenerate range maps everything to code 0. Rounding is half away from
// zero.
inline std::uint8_t quantize(float x, const QuantParams& p) {
  if (p.scale == 0.0f) return 0;
  const float units = std::round((x - p.t_min) / p.scale);
  const float top = static_cast<float>(p.max_code());
  if (!(units > 0.0f)) return 0;  // negatives and NaN clamp low
  if (units >= top) return static_cast<std::uint8_t>(top);
  return static_cast<std::uint8_t>(units);
}

inline float dequantize(std::uint8_t code, const QuantParams& p) {
  if (static_cast<int>(code) > p.max_code())
    throw std::invalid_argument("dequantize: code out of range for bit-width");
  if (p.scale == 0.0f) return p.t_min;
  return static_cast<float>(code) * p.scale + p.t_min;
}

// A quantized block of values together with the parameters they were fit
// under. `shape` mirrors whatever layout the caller flattened.
struct QuantizedBlock {
  std::vector<std::uint8_t> codes;
  std::vector<int> shape;
  QuantParams params;
};

inline QuantizedBlock quantize_span(std::span<const float> values, int bits) {
  QuantizedBlock block;
  block.params = fit_params(values, bits);
  block.shape = {static_cast<int>(values.size())};
  block.codes.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    block.codes[i] = quantize(values[i], block.params);
  return block;
}

// PerPosition expects position-major data: `positions` equally sized
// contiguous groups, one parameter fit per group. PerTile and PerTensor
// treat the whole span as a single fitting set.
inline std::vector<QuantizedBlock> quantize_block(std::span<const float> values,
                                                  int bits, Granularity g,
                                                  int positions = 16) {
  if (g != Granularity::PerPosition) return {quantize_span(values, bits)};
  if (positions <= 0 || values.size() % static_cast<std::size_t>(positions) != 0)
    throw std::invalid_argument(
        "quantize_block: value count not divisible into positions");
  const std::size_t group = values.size() / positions;
  std::vector<QuantizedBlock> out;
  out.reserve(positions);
  for (int p = 0; p < positions; ++p)
    out.push_back(quantize_span(values.subspan(p * group, group), bits));
  return out;
}

}  // namespace lance
