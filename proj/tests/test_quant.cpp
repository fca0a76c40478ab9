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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lance/quant.hpp"
#include "lance/rng.hpp"

using namespace lance;

namespace {

std::vector<float> ramp16() {
  std::vector<float> v(16);
  for (int i = 0; i < 16; ++i) v[std::size_t(i)] = float(i);
  return v;
}

}  // namespace

TEST_CASE("fit_params on the 0..15 ramp at 2 bits") {
  const QuantParams p = fit_params(ramp16(), 2);
  CHECK(p.t_min == 0.0f);
  CHECK(p.t_max == 15.0f);
  CHECK(p.scale == 5.0f);
}

TEST_CASE("fit_params degenerate and two-point sets") {
  const std::vector<float> single{7.5f};
  const QuantParams p = fit_params(single, 8);
  CHECK(p.t_min == 7.5f);
  CHECK(p.t_max == 7.5f);
  CHECK(p.scale == 0.0f);

  const std::vector<float> two{-1.0f, 1.0f};
  const QuantParams q = fit_params(two, 8);
  CHECK(q.scale == Catch::Approx(2.0 / 255.0).epsilon(1e-7));
}

TEST_CASE("fit_params rejects bad inputs") {
  CHECK_THROWS_AS(fit_params(std::vector<float>{}, 8), std::invalid_argument);
  CHECK_THROWS_AS(fit_params(ramp16(), 1), std::invalid_argument);
  CHECK_THROWS_AS(fit_params(ramp16(), 9), std::invalid_argument);
  std::vector<float> with_nan{1.0f, std::numeric_limits<float>::quiet_NaN()};
  CHECK_THROWS_AS(fit_params(with_nan, 8), std::invalid_argument);
}

TEST_CASE("quantize maps the ramp endpoints and midpoint as specified") {
  const QuantParams p = fit_params(ramp16(), 2);
  CHECK(quantize(0.0f, p) == 0);
  CHECK(quantize(15.0f, p) == 3);
  CHECK(quantize(7.0f, p) == 1);  // 7/5 = 1.4 rounds to 1

  // full table for the 2-bit ramp, half-away-from-zero rounding
  const int expected[16] = {0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3};
  for (int i = 0; i < 16; ++i) CHECK(int(quantize(float(i), p)) == expected[i]);
}

TEST_CASE("quantize clamps out-of-range values and handles scale zero") {
  const QuantParams p = fit_params(ramp16(), 2);
  CHECK(quantize(-100.0f, p) == 0);
  CHECK(quantize(1000.0f, p) == 3);

  const QuantParams degenerate = fit_params(std::vector<float>{4.0f}, 4);
  CHECK(quantize(4.0f, degenerate) == 0);
  CHECK(quantize(123.0f, degenerate) == 0);
}

TEST_CASE("dequantize recovers grid points and validates codes") {
  const QuantParams p = fit_params(ramp16(), 2);
  CHECK(dequantize(0, p) == 0.0f);
  CHECK(dequantize(1, p) == 5.0f);
  CHECK(dequantize(3, p) == 15.0f);
  CHECK_THROWS_AS(dequantize(4, p), std::invalid_argument);

  const QuantParams degenerate = fit_params(std::vector<float>{4.0f}, 4);
  CHECK(dequantize(0, degenerate) == 4.0f);
}

TEST_CASE("quantize_block on a constant tile gives scale zero and zero codes") {
  std::vector<float> tile(16, 3.25f);
  const auto blocks = quantize_block(tile, 8, Granularity::PerTile);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].params.scale == 0.0f);
  for (auto code : blocks[0].codes) CHECK(code == 0);
}

TEST_CASE("quantize_block spans the full code range on the ramp tile") {
  const auto blocks = quantize_block(ramp16(), 2, Granularity::PerTile);
  REQUIRE(blocks.size() == 1);
  const auto [lo, hi] =
      std::minmax_element(blocks[0].codes.begin(), blocks[0].codes.end());
  CHECK(int(*lo) == 0);
  CHECK(int(*hi) == 3);
}

TEST_CASE("quantize_block per position fits one parameter set per group") {
  std::vector<float> values(32);
  for (int i = 0; i < 16; ++i) values[std::size_t(i)] = float(i);        // group 0
  for (int i = 0; i < 16; ++i) values[std::size_t(16 + i)] = float(10 * i);  // group 1
  const auto blocks = quantize_block(values, 4, Granularity::PerPosition, 2);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].params.t_max == 15.0f);
  CHECK(blocks[1].params.t_max == 150.0f);

  CHECK_THROWS_AS(quantize_block(values, 4, Granularity::PerPosition, 3),
                  std::invalid_argument);
}

TEST_CASE("round-trip error stays within half a step") {
  UniformSource src(11);
  std::vector<float> values(256);
  for (auto& v : values) v = src.next() * 20.0f;
  const QuantParams p = fit_params(values, 8);
  for (float v : values) {
    const float back = dequantize(quantize(v, p), p);
    REQUIRE(std::abs(back - v) <= p.scale / 2 + 1e-6f * p.scale);
  }
}

// Property suite over every bit-width: range, round-trip bound, endpoint
// exactness, monotonicity.
TEST_CASE("quantizer contract holds for all bit-widths") {
  UniformSource src(23);
  for (int bits = 2; bits <= 8; ++bits) {
    std::vector<float> values(2000);
    for (auto& v : values) v = src.next() * 7.0f + 1.5f;
    const QuantParams p = fit_params(values, bits);

    CHECK(quantize(p.t_min, p) == 0);
    CHECK(int(quantize(p.t_max, p)) == p.max_code());
    const float eps = 4e-6f * (std::abs(p.t_min) + std::abs(p.t_max) + p.scale);
    CHECK(std::abs(dequantize(0, p) - p.t_min) <= eps);
    CHECK(std::abs(dequantize(std::uint8_t(p.max_code()), p) - p.t_max) <= eps);

    std::sort(values.begin(), values.end());
    int prev = -1;
    for (float v : values) {
      const int code = quantize(v, p);
      REQUIRE(code <= p.max_code());
      REQUIRE(code >= prev);
      prev = code;
      REQUIRE(std::abs(dequantize(std::uint8_t(code), p) - v) <=
              p.scale / 2 + 1e-6f * p.scale);
    }
  }
}
