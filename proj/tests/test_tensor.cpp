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

#include <bit>
#include <cstdint>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "lance/rng.hpp"
#include "lance/tensor.hpp"
#include "lance/tensor_io.hpp"

using namespace lance;

namespace {

// Independent scalar oracle: tile (ti, tj) element (a, b, ch) of an image,
// reading through the padded coordinate directly.
float tile_oracle(const Tensor4& x, int img, int ti, int tj, int a, int b, int ch,
                  int pad) {
  const int i = ti * 2 - pad + a;
  const int j = tj * 2 - pad + b;
  if (i < 0 || i >= x.h || j < 0 || j >= x.w) return 0.0f;
  return x.at(img, i, j, ch);
}

}  // namespace

TEST_CASE("single tile equals the image when it fits exactly") {
  Tensor4 x(1, 4, 4, 1);
  UniformSource src(1);
  src.fill(x.data);

  const TileSet tiles = extract_tiles(x, 2, 3, 0);
  REQUIRE(tiles.ph == 1);
  REQUIRE(tiles.pw == 1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(tiles.at(0, 0, a, b, 0) == x.at(0, a, b, 0));
}

TEST_CASE("zero image with padding yields four zero tiles") {
  Tensor4 x(1, 4, 4, 1);
  const TileSet tiles = extract_tiles(x, 2, 3, 1);
  REQUIRE(tiles.ph == 2);
  REQUIRE(tiles.pw == 2);
  for (float v : tiles.data) CHECK(v == 0.0f);
}

TEST_CASE("tile indexing matches the scalar oracle") {
  Tensor4 x(1, 6, 6, 1);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) x.at(0, i, j, 0) = float(6 * i + j);

  const TileSet tiles = extract_tiles(x, 2, 3, 0);
  REQUIRE(tiles.ph == 2);
  REQUIRE(tiles.pw == 2);
  // tile (0,1) covers columns 2..5 of rows 0..3
  CHECK(tiles.at(0, 1, 0, 0, 0) == 2.0f);
  CHECK(tiles.at(0, 1, 0, 1, 0) == 3.0f);
  CHECK(tiles.at(0, 1, 0, 2, 0) == 4.0f);
  CHECK(tiles.at(0, 1, 0, 3, 0) == 5.0f);

  for (int pad : {0, 1}) {
    const TileSet t2 = extract_tiles(x, 2, 3, pad);
    for (int ti = 0; ti < t2.ph; ++ti)
      for (int tj = 0; tj < t2.pw; ++tj)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            REQUIRE(t2.at(0, ti * t2.pw + tj, a, b, 0) ==
                    tile_oracle(x, 0, ti, tj, a, b, 0, pad));
  }
}

TEST_CASE("extract_tiles rejects bad arguments") {
  Tensor4 x(1, 4, 4, 1);
  CHECK_THROWS_AS(extract_tiles(x, 3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(extract_tiles(x, 2, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(extract_tiles(x, 2, 3, 2), std::invalid_argument);
  Tensor4 tiny(1, 2, 2, 1);
  CHECK_THROWS_AS(extract_tiles(tiny, 2, 3, 0), std::invalid_argument);
  CHECK_NOTHROW(extract_tiles(tiny, 2, 3, 1));
}

TEST_CASE("merge places a single tile verbatim") {
  TileSet tiles;
  tiles.images = 1;
  tiles.ph = tiles.pw = 1;
  tiles.tile = 2;
  tiles.channels = 1;
  tiles.data = {1.0f, 2.0f, 3.0f, 4.0f};

  const Tensor4 y = merge_tiles(tiles, 2, 2);
  CHECK(y.at(0, 0, 0, 0) == 1.0f);
  CHECK(y.at(0, 0, 1, 0) == 2.0f);
  CHECK(y.at(0, 1, 0, 0) == 3.0f);
  CHECK(y.at(0, 1, 1, 0) == 4.0f);
}

TEST_CASE("merge of zero tiles is a zero tensor") {
  TileSet tiles;
  tiles.images = 1;
  tiles.ph = tiles.pw = 2;
  tiles.tile = 2;
  tiles.channels = 1;
  tiles.data.assign(16, 0.0f);
  const Tensor4 y = merge_tiles(tiles, 4, 4);
  for (float v : y.data) CHECK(v == 0.0f);
}

TEST_CASE("merge discards the ceil-rounded row and column on odd outputs") {
  TileSet tiles;
  tiles.images = 1;
  tiles.ph = tiles.pw = 2;
  tiles.tile = 2;
  tiles.channels = 1;
  tiles.data.resize(16);
  for (int i = 0; i < 16; ++i) tiles.data[std::size_t(i)] = float(i + 1);

  const Tensor4 y = merge_tiles(tiles, 3, 3);
  // Scalar oracle: value at (i, j) comes from tile (i/2, j/2) slot (i%2, j%2).
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int t = (i / 2) * 2 + (j / 2);
      const float expected = tiles.at(0, t, i % 2, j % 2, 0);
      REQUIRE(y.at(0, i, j, 0) == expected);
    }

  CHECK_THROWS_AS(merge_tiles(tiles, 7, 7), std::invalid_argument);
}

TEST_CASE("tile grid follows ceil(out/2) across sizes") {
  for (int h = 3; h <= 32; ++h)
    for (int pad : {0, 1}) {
      Tensor4 x(1, h, h + 1, 2);
      const TileSet tiles = extract_tiles(x, 2, 3, pad);
      const int out_h = h + 2 * pad - 2;
      const int out_w = h + 1 + 2 * pad - 2;
      REQUIRE(tiles.ph == (out_h + 1) / 2);
      REQUIRE(tiles.pw == (out_w + 1) / 2);
      REQUIRE(std::int64_t(tiles.ph) * tiles.pw * 4 >= std::int64_t(out_h) * out_w);
    }
}

TEST_CASE("smallest tensor encodes to 43 bytes") {
  Tensor4 t(1, 1, 1, 1);
  std::ostringstream os;
  write_tensor(t, os);
  const std::string bytes = os.str();
  REQUIRE(bytes.size() == 43);  // 39-byte header + one fp32
  CHECK(bytes.substr(0, 4) == "LTEN");
  CHECK(std::uint8_t(bytes[4]) == 1);  // version, little-endian u16
  CHECK(std::uint8_t(bytes[5]) == 0);
  CHECK(std::uint8_t(bytes[6]) == 0);  // dtype fp32
}

TEST_CASE("file round-trip is bitwise lossless including NaN payloads") {
  UniformSource src(7);
  for (int trial = 0; trial < 20; ++trial) {
    Tensor4 t(src.next_int(1, 3), src.next_int(1, 5), src.next_int(1, 5),
              src.next_int(1, 4));
    src.fill(t.data);
    if (t.size() > 2) {
      t.data[0] = std::bit_cast<float>(std::uint32_t(0x7fc12345u));  // NaN payload
      t.data[1] = -0.0f;
      t.data[2] = std::bit_cast<float>(std::uint32_t(0xff800000u));  // -inf
    }
    std::stringstream buf;
    write_tensor(t, buf);
    const Tensor4 back = read_tensor(buf);
    REQUIRE(back.n == t.n);
    REQUIRE(back.h == t.h);
    REQUIRE(back.w == t.w);
    REQUIRE(back.c == t.c);
    for (std::size_t i = 0; i < t.size(); ++i)
      REQUIRE(std::bit_cast<std::uint32_t>(back.data[i]) ==
              std::bit_cast<std::uint32_t>(t.data[i]));
  }
}

TEST_CASE("reader rejects malformed streams") {
  Tensor4 t(1, 2, 2, 1);
  std::ostringstream os;
  write_tensor(t, os);
  std::string bytes = os.str();

  SECTION("bad magic") {
    bytes[0] = 'X';
    std::istringstream is(bytes);
    CHECK_THROWS_AS(read_tensor(is), FormatError);
  }
  SECTION("unsupported version") {
    bytes[4] = 2;
    std::istringstream is(bytes);
    CHECK_THROWS_AS(read_tensor(is), FormatError);
  }
  SECTION("unsupported dtype") {
    bytes[6] = 9;
    std::istringstream is(bytes);
    CHECK_THROWS_AS(read_tensor(is), FormatError);
  }
  SECTION("truncated payload") {
    std::istringstream is(bytes.substr(0, bytes.size() - 3));
    CHECK_THROWS_AS(read_tensor(is), FormatError);
  }
  SECTION("zero dimension") {
    for (int i = 0; i < 8; ++i) bytes[7 + i] = 0;  // N = 0
    std::istringstream is(bytes);
    CHECK_THROWS_AS(read_tensor(is), FormatError);
  }
  SECTION("dimension overflow") {
    for (int i = 0; i < 8; ++i) bytes[std::size_t(7 + i)] = char(0xff);
    std::istringstream is(bytes);
    CHECK_THROWS_AS(read_tensor(is), FormatError);
  }
}

TEST_CASE("constructors validate dims and payload length") {
  CHECK_THROWS_AS(Tensor4(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Tensor4(1, 1, 1, 1, std::vector<float>(2)), std::invalid_argument);
  CHECK_THROWS_AS(FilterBank(1, 3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(FilterBank(1, 3, 3, 1, std::vector<float>(5)),
                  std::invalid_argument);
}
