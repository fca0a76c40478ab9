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

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lance {

// Dense fp32 tensor in NHWC order, channels innermost.
struct Tensor4 {
  int n = 0, h = 0, w = 0, c = 0;
  std::vector<float> data;

  Tensor4() = default;

  Tensor4(int n_, int h_, int w_, int c_) : n(n_), h(h_), w(w_), c(c_) {
    if (n < 1 || h < 1 || w < 1 || c < 1)
      throw std::invalid_argument("Tensor4: all dims must be >= 1");
    data.assign(size_t(n) * h * w * c, 0.0f);
  }

  Tensor4(int n_, int h_, int w_, int c_, std::vector<float> values)
      : Tensor4(n_, h_, w_, c_) {
    if (values.size() != data.size())
      throw std::invalid_argument("Tensor4: data length does not match dims");
    data = std::move(values);
  }

  std::size_t size() const { return data.size(); }

  std::size_t index(int ni, int hi, int wi, int ci) const {
    return ((size_t(ni) * h + hi) * w + wi) * c + ci;
  }
  float& at(int ni, int hi, int wi, int ci) { return data[index(ni, hi, wi, ci)]; }
  const float& at(int ni, int hi, int wi, int ci) const {
    return data[index(ni, hi, wi, ci)];
  }

  bool operator==(const Tensor4&) const = default;
};

// Filters in KRSC order: filter count, height, width, channels.
struct FilterBank {
  int k = 0, r = 0, s = 0, c = 0;
  std::vector<float> data;

  FilterBank() = default;

  FilterBank(int k_, int r_, int s_, int c_) : k(k_), r(r_), s(s_), c(c_) {
    if (k < 1 || r < 1 || s < 1 || c < 1)
      throw std::invalid_argument("FilterBank: all dims must be >= 1");
    data.assign(size_t(k) * r * s * c, 0.0f);
  }

  FilterBank(int k_, int r_, int s_, int c_, std::vector<float> values)
      : FilterBank(k_, r_, s_, c_) {
    if (values.size() != data.size())
      throw std::invalid_argument("FilterBank: data length does not match dims");
    data = std::move(values);
  }

  std::size_t size() const { return data.size(); }

  std::size_t index(int ki, int ri, int si, int ci) const {
    return ((size_t(ki) * r + ri) * s + si) * c + ci;
  }
  float& at(int ki, int ri, int si, int ci) { return data[index(ki, ri, si, ci)]; }
  const float& at(int ki, int ri, int si, int ci) const {
    return data[index(ki, ri, si, ci)];
  }
};

// Square tiles cut from (or destined for) an image, channels innermost:
// [image][tile][row][col][channel]. The tile grid is row-major, ph x pw per
// image; border tiles are zero-padded to the full tile side.
struct TileSet {
  int images = 0;
  int ph = 0, pw = 0;  // tile grid
  int tile = 0;        // side length
  int channels = 0;
  std::vector<float> data;

  int tiles_per_image() const { return ph * pw; }

  std::size_t index(int img, int t, int row, int col, int ch) const {
    return (((size_t(img) * tiles_per_image() + t) * tile + row) * tile + col) *
               channels +
           ch;
  }
  float& at(int img, int t, int row, int col, int ch) {
    return data[index(img, t, row, col, ch)];
  }
  const float& at(int img, int t, int row, int col, int ch) const {
    return data[index(img, t, row, col, ch)];
  }
};

// Cuts overlapping (m+r-1)-sided tiles with stride m from a zero-padded
// image. Out-of-range pixels (symmetric padding and the ceil-rounded
// bottom/right border) read as 0.
inline TileSet extract_tiles(const Tensor4& x, int m, int r, int pad) {
  if (m != 2 || r != 3)
    throw std::invalid_argument("extract_tiles: only m=2, r=3 is supported");
  if (pad != 0 && pad != 1)
    throw std::invalid_argument("extract_tiles: pad must be 0 or 1");
  if (x.h + 2 * pad < r || x.w + 2 * pad < r)
    throw std::invalid_argument("extract_tiles: padded input smaller than filter");

  const int out_h = x.h + 2 * pad - r + 1;
  const int out_w = x.w + 2 * pad - r + 1;
  const int alpha = m + r - 1;
  TileSet tiles;
  tiles.images = x.n;
  tiles.ph = (out_h + m - 1) / m;
  tiles.pw = (out_w + m - 1) / m;
  tiles.tile = alpha;
  tiles.channels = x.c;
  tiles.data.assign(size_t(x.n) * tiles.tiles_per_image() * alpha * alpha * x.c,
                    0.0f);

  for (int img = 0; img < x.n; ++img)
    for (int ti = 0; ti < tiles.ph; ++ti)
      for (int tj = 0; tj < tiles.pw; ++tj) {
        const int t = ti * tiles.pw + tj;
        for (int a = 0; a < alpha; ++a) {
          const int src_i = ti * m - pad + a;
          if (src_i < 0 || src_i >= x.h) continue;
          for (int b = 0; b < alpha; ++b) {
            const int src_j = tj * m - pad + b;
            if (src_j < 0 || src_j >= x.w) continue;
            for (int ch = 0; ch < x.c; ++ch)
              tiles.at(img, t, a, b, ch) = x.at(img, src_i, src_j, ch);
          }
        }
      }
  return tiles;
}

// Places m x m output tiles back into an image. Tile (ti, tj) element (a, b)
// lands at (ti*m + a, tj*m + b); positions past out_h/out_w from the
// ceil-rounded grid are discarded.
inline Tensor4 merge_tiles(const TileSet& tiles, int out_h, int out_w) {
  const int m = tiles.tile;
  if (tiles.images < 1 || tiles.channels < 1 || m < 1)
    throw std::invalid_argument("merge_tiles: empty tile set");
  if (out_h < 1 || out_w < 1 || tiles.ph != (out_h + m - 1) / m ||
      tiles.pw != (out_w + m - 1) / m)
    throw std::invalid_argument("merge_tiles: grid inconsistent with output dims");

  Tensor4 y(tiles.images, out_h, out_w, tiles.channels);
  for (int img = 0; img < tiles.images; ++img)
    for (int ti = 0; ti < tiles.ph; ++ti)
      for (int tj = 0; tj < tiles.pw; ++tj) {
        const int t = ti * tiles.pw + tj;
        for (int a = 0; a < m; ++a) {
          const int oi = ti * m + a;
          if (oi >= out_h) break;
          for (int b = 0; b < m; ++b) {
            const int oj = tj * m + b;
            if (oj >= out_w) break;
            for (int ch = 0; ch < tiles.channels; ++ch)
              y.at(img, oi, oj, ch) = tiles.at(img, t, a, b, ch);
          }
        }
      }
  return y;
}

}  // namespace lance
