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

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "lance/rng.hpp"
#include "lance/verify.hpp"
#include "lance/winograd.hpp"

using namespace lance;

namespace {

// Test-side oracle, independent of the library's verify helpers.
MatF brute_correlate(const MatF& d, const MatF& g) {
  MatF out(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double acc = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          acc += double(d.at(i + a, j + b)) * double(g.at(a, b));
      out.at(i, j) = float(acc);
    }
  return out;
}

MatF random_mat(int side, UniformSource& src) {
  MatF m(side, side);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) m.at(i, j) = src.next();
  return m;
}

}  // namespace

TEST_CASE("basis constants are the published F(2x2,3x3) matrices") {
  const WinogradBasis& basis = basis_f2x2_3x3();
  CHECK(basis.m == 2);
  CHECK(basis.r == 3);
  CHECK(basis.alpha == 4);

  const float bt_row0[4] = {1.0f, 0.0f, -1.0f, 0.0f};
  for (int j = 0; j < 4; ++j) CHECK(basis.bt_mat.at(0, j) == bt_row0[j]);

  const MatF expected_g{{1.0f, 0.0f, 0.0f},
                        {0.5f, 0.5f, 0.5f},
                        {0.5f, -0.5f, 0.5f},
                        {0.0f, 0.0f, 1.0f}};
  CHECK(basis.g_mat == expected_g);
  const MatF expected_at{{1.0f, 1.0f, 1.0f, 0.0f}, {0.0f, 1.0f, -1.0f, -1.0f}};
  CHECK(basis.at_mat == expected_at);
}

TEST_CASE("input transform of the quantized ramp tile is integer-exact") {
  const MatF d{{0.0f, 1.0f, 1.0f, 1.0f},
               {1.0f, 1.0f, 2.0f, 2.0f},
               {2.0f, 2.0f, 2.0f, 3.0f},
               {3.0f, 3.0f, 3.0f, 3.0f}};
  const MatF expected{{-1.0f, -2.0f, 0.0f, 1.0f},
                      {-1.0f, 7.0f, 1.0f, -2.0f},
                      {1.0f, 1.0f, -1.0f, 0.0f},
                      {-1.0f, -3.0f, 1.0f, -1.0f}};
  const MatF got = transform_input(d, basis_f2x2_3x3());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) REQUIRE(got.at(i, j) == expected.at(i, j));
}

TEST_CASE("input transform basics") {
  const WinogradBasis& basis = basis_f2x2_3x3();

  MatF zero(4, 4);
  CHECK(transform_input(zero, basis) == zero);

  MatF e00(4, 4);
  e00.at(0, 0) = 1.0f;
  const MatF got = transform_input(e00, basis);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(got.at(i, j) == ((i == 0 && j == 0) ? 1.0f : 0.0f));

  CHECK_THROWS_AS(transform_input(MatF(3, 3), basis), std::invalid_argument);
}

TEST_CASE("filter transform matches hand-computed values") {
  const WinogradBasis& basis = basis_f2x2_3x3();

  MatF ones(3, 3);
  ones.fill(1.0f);
  const MatF expected{{1.0f, 1.5f, 0.5f, 1.0f},
                      {1.5f, 2.25f, 0.75f, 1.5f},
                      {0.5f, 0.75f, 0.25f, 0.5f},
                      {1.0f, 1.5f, 0.5f, 1.0f}};
  const MatF got = transform_filter(ones, basis);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) REQUIRE(got.at(i, j) == expected.at(i, j));

  MatF zero(3, 3);
  CHECK(transform_filter(zero, basis) == MatF(4, 4));

  // center impulse: outer product of [0, 1/2, -1/2, 0]
  MatF center(3, 3);
  center.at(1, 1) = 1.0f;
  const MatF c = transform_filter(center, basis);
  const float col[4] = {0.0f, 0.5f, -0.5f, 0.0f};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) REQUIRE(c.at(i, j) == col[i] * col[j]);

  // corner impulse: outer product of the first column of the filter transform
  MatF corner(3, 3);
  corner.at(0, 0) = 1.0f;
  const MatF k = transform_filter(corner, basis);
  const float col0[4] = {1.0f, 0.5f, 0.5f, 0.0f};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) REQUIRE(k.at(i, j) == col0[i] * col0[j]);

  CHECK_THROWS_AS(transform_filter(MatF(4, 4), basis), std::invalid_argument);
}

TEST_CASE("output transform matches hand-computed values") {
  const WinogradBasis& basis = basis_f2x2_3x3();

  MatF ones(4, 4);
  ones.fill(1.0f);
  const MatF got = transform_output(ones, basis);
  CHECK(got.at(0, 0) == 9.0f);
  CHECK(got.at(0, 1) == -3.0f);
  CHECK(got.at(1, 0) == -3.0f);
  CHECK(got.at(1, 1) == 1.0f);

  CHECK(transform_output(MatF(4, 4), basis) == MatF(2, 2));
  CHECK_THROWS_AS(transform_output(MatF(2, 2), basis), std::invalid_argument);
}

TEST_CASE("transform composition equals brute-force correlation") {
  const WinogradBasis& basis = basis_f2x2_3x3();
  UniformSource src(99);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const MatF d = random_mat(4, src);
    const MatF g = random_mat(3, src);
    const MatF via = transform_output(
        hadamard(transform_filter(g, basis), transform_input(d, basis)), basis);
    const MatF ref = brute_correlate(d, g);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        worst = std::max(worst, std::abs(double(via.at(i, j)) - ref.at(i, j)));
  }
  CHECK(worst <= 1e-5);
}

TEST_CASE("transforms are linear") {
  const WinogradBasis& basis = basis_f2x2_3x3();
  UniformSource src(17);
  for (int trial = 0; trial < 200; ++trial) {
    const MatF a = random_mat(4, src);
    const MatF b = random_mat(4, src);
    const float alpha = src.next();
    MatF combo(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) combo.at(i, j) = alpha * a.at(i, j) + b.at(i, j);
    const MatF lhs = transform_input(combo, basis);
    const MatF ra = transform_input(a, basis);
    const MatF rb = transform_input(b, basis);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        REQUIRE(std::abs(lhs.at(i, j) - (alpha * ra.at(i, j) + rb.at(i, j))) <=
                1e-6f);
  }
}

TEST_CASE("verify checks cover the golden vector and fail on a mutated basis") {
  CHECK(check_basis_constants().pass);
  CHECK(check_golden_input_transform().pass);
  CHECK(check_correlation_identity(200).pass);

  WinogradBasis corrupted = basis_f2x2_3x3();
  corrupted.bt_mat.at(1, 1) = -1.0f;  // mutation: flip one transform constant
  CHECK_FALSE(check_golden_input_transform(corrupted).pass);
  CHECK_FALSE(check_correlation_identity(50, 101, corrupted).pass);
  CHECK_FALSE(check_basis_constants(corrupted).pass);
}
