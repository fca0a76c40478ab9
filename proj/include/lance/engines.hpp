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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lance/lowpgemm.hpp"
#include "lance/parallel.hpp"
#include "lance/quant.hpp"
#include "lance/tensor.hpp"
#include "lance/winograd.hpp"

namespace lance {

// Layer geometry. Stride is fixed at 1 and filters at 3x3; anything else is
// rejected rather than silently handled differently.
struct ConvSpec {
  int n = 1, c = 1, h = 1, w = 1;
  int k = 1;
  int pad = 0;  // symmetric zero padding, 0 or 1
  static constexpr int r = 3, s = 3;
  static constexpr int stride = 1;

  int out_h() const { return h + 2 * pad - r + 1; }
  int out_w() const { return w + 2 * pad - s + 1; }
  int tiles_h() const { return (out_h() + 1) / 2; }
  int tiles_w() const { return (out_w() + 1) / 2; }
  int tiles_per_image() const { return tiles_h() * tiles_w(); }

  void validate() const {
    if (n < 1 || c < 1 || h < 1 || w < 1 || k < 1)
      throw std::invalid_argument("ConvSpec: all dims must be >= 1");
    if (pad != 0 && pad != 1)
      throw std::invalid_argument("ConvSpec: pad must be 0 or 1");
    if (out_h() < 1 || out_w() < 1)
      throw std::invalid_argument("ConvSpec: output dims collapse to zero");
  }
};

enum class LanceMode { Faithful, Gemm };

// Quantized-engine settings. Bit-width 32 keeps that operand in full
// precision (no quantization pass for it).
struct LanceConfig {
  int bits_w = 8;
  int bits_i = 8;
  Granularity granularity = Granularity::PerTile;
  LanceMode mode = LanceMode::Faithful;

  void validate() const {
    auto ok = [](int b) { return (b >= 2 && b <= 8) || b == 32; };
    if (!ok(bits_w) || !ok(bits_i))
      throw std::invalid_argument("LanceConfig: bits must be in [2, 8] or 32");
    if (mode == LanceMode::Gemm) {
      if (granularity == Granularity::PerTile)
        throw std::invalid_argument(
            "LanceConfig: Gemm mode cannot use PerTile granularity; integer "
            "accumulation across channels needs one scale per position");
      if (bits_w == 32 || bits_i == 32)
        throw std::invalid_argument(
            "LanceConfig: Gemm mode requires quantized operands (bits <= 8)");
    }
  }
};

namespace detail {

inline void check_layer(const Tensor4& x, const FilterBank& w,
                        const ConvSpec& spec) {
  spec.validate();
  if (x.n != spec.n || x.h != spec.h || x.w != spec.w || x.c != spec.c)
    throw std::invalid_argument("input tensor dims do not match spec");
  if (w.k != spec.k || w.r != ConvSpec::r || w.s != ConvSpec::s || w.c != spec.c)
    throw std::invalid_argument("filter dims do not match spec");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Transform-domain containers

// Transform-domain values, position-major: [position][row][col] with 16
// positions for F(2x2,3x3). Inputs use rows = tiles(P*N), cols = C; weights
// use rows = C, cols = K, so each position slice is a ready GEMM operand.
struct DomainTensor {
  int positions = 0;
  int rows = 0, cols = 0;
  std::vector<float> values;

  std::size_t index(int p, int row, int col) const {
    return (std::size_t(p) * rows + row) * cols + col;
  }
  float& at(int p, int row, int col) { return values[index(p, row, col)]; }
  const float& at(int p, int row, int col) const {
    return values[index(p, row, col)];
  }
};

// Codes for a DomainTensor plus the parameter set for the chosen
// granularity: PerTile fits across the 16 positions of one (row, col),
// PerPosition across one position slice, PerTensor across everything.
struct QuantizedDomain {
  Granularity gran = Granularity::PerTensor;
  int positions = 0;
  int rows = 0, cols = 0;
  std::vector<std::uint8_t> codes;
  std::vector<QuantParams> params;

  std::size_t index(int p, int row, int col) const {
    return (std::size_t(p) * rows + row) * cols + col;
  }
  std::uint8_t code_at(int p, int row, int col) const {
    return codes[index(p, row, col)];
  }
  const QuantParams& param_at(int p, int row, int col) const {
    switch (gran) {
      case Granularity::PerTile: return params[std::size_t(row) * cols + col];
      case Granularity::PerPosition: return params[std::size_t(p)];
      default: return params[0];
    }
  }
};

inline QuantizedDomain quantize_domain(const DomainTensor& dt, int bits,
                                       Granularity gran) {
  QuantizedDomain q;
  q.gran = gran;
  q.positions = dt.positions;
  q.rows = dt.rows;
  q.cols = dt.cols;
  q.codes.resize(dt.values.size());

  const std::size_t slice = std::size_t(dt.rows) * dt.cols;
  switch (gran) {
    case Granularity::PerTensor: {
      q.params = {fit_params(dt.values, bits)};
      for (std::size_t i = 0; i < dt.values.size(); ++i)
        q.codes[i] = quantize(dt.values[i], q.params[0]);
      break;
    }
    case Granularity::PerPosition: {
      q.params.resize(std::size_t(dt.positions));
      for (int p = 0; p < dt.positions; ++p) {
        const std::span<const float> view(dt.values.data() + p * slice, slice);
        q.params[std::size_t(p)] = fit_params(view, bits);
        for (std::size_t i = 0; i < slice; ++i)
          q.codes[p * slice + i] = quantize(view[i], q.params[std::size_t(p)]);
      }
      break;
    }
    case Granularity::PerTile: {
      q.params.resize(slice);
      std::vector<float> gather(std::size_t(dt.positions));
      for (int row = 0; row < dt.rows; ++row)
        for (int col = 0; col < dt.cols; ++col) {
          for (int p = 0; p < dt.positions; ++p)
            gather[std::size_t(p)] = dt.at(p, row, col);
          const QuantParams fitted = fit_params(gather, bits);
          q.params[std::size_t(row) * dt.cols + col] = fitted;
          for (int p = 0; p < dt.positions; ++p)
            q.codes[q.index(p, row, col)] = quantize(gather[std::size_t(p)], fitted);
        }
      break;
    }
  }
  return q;
}

namespace detail {

// Transformed input tiles, scattered position-major. Parallel across tiles;
// every task owns its row of each position slice.
inline DomainTensor domain_from_tiles(const TileSet& tiles,
                                      const WinogradBasis& basis) {
  const int alpha = basis.alpha;
  DomainTensor dt;
  dt.positions = alpha * alpha;
  dt.rows = tiles.images * tiles.tiles_per_image();
  dt.cols = tiles.channels;
  dt.values.resize(std::size_t(dt.positions) * dt.rows * dt.cols);

  parallel_for(dt.rows, [&](std::int64_t row) {
    const int img = int(row) / tiles.tiles_per_image();
    const int t = int(row) % tiles.tiles_per_image();
    MatF d(alpha, alpha);
    for (int ch = 0; ch < tiles.channels; ++ch) {
      for (int a = 0; a < alpha; ++a)
        for (int b = 0; b < alpha; ++b) d.at(a, b) = tiles.at(img, t, a, b, ch);
      const MatF v = transform_input(d, basis);
      for (int p = 0; p < dt.positions; ++p)
        dt.at(p, int(row), ch) = v.data()[p];
    }
  });
  return dt;
}

// Transformed filters: rows = C, cols = K. Computed once per invocation and
// reused across every tile and image.
inline DomainTensor domain_from_filters(const FilterBank& w,
                                        const WinogradBasis& basis) {
  DomainTensor dt;
  dt.positions = basis.alpha * basis.alpha;
  dt.rows = w.c;
  dt.cols = w.k;
  dt.values.resize(std::size_t(dt.positions) * dt.rows * dt.cols);

  parallel_for(std::int64_t(w.k) * w.c, [&](std::int64_t task) {
    const int ki = int(task / w.c);
    const int ci = int(task % w.c);
    MatF g(basis.r, basis.r);
    for (int a = 0; a < basis.r; ++a)
      for (int b = 0; b < basis.r; ++b) g.at(a, b) = w.at(ki, a, b, ci);
    const MatF u = transform_filter(g, basis);
    for (int p = 0; p < dt.positions; ++p) dt.at(p, ci, ki) = u.data()[p];
  });
  return dt;
}

inline TileSet make_output_tiles(const ConvSpec& spec) {
  TileSet out;
  out.images = spec.n;
  out.ph = spec.tiles_h();
  out.pw = spec.tiles_w();
  out.tile = 2;
  out.channels = spec.k;
  out.data.assign(std::size_t(spec.n) * out.tiles_per_image() * 4 * spec.k, 0.0f);
  return out;
}

// Inverse-transform one accumulated domain tile and place it.
inline void emit_output_tile(const float accum[16], int row, int ki,
                             const WinogradBasis& basis, TileSet& out) {
  MatF m_dom(basis.alpha, basis.alpha);
  for (int p = 0; p < 16; ++p) m_dom.data()[p] = accum[p];
  const MatF s2 = transform_output(m_dom, basis);
  const int img = row / out.tiles_per_image();
  const int t = row % out.tiles_per_image();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out.at(img, t, a, b, ki) = s2.at(a, b);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Engines

// Plain quadruple-loop correlation with zero padding; the oracle every other
// engine is checked against. Channels accumulate in ascending order so the
// result is bit-reproducible under any parallel split.
inline Tensor4 direct_conv(const Tensor4& x, const FilterBank& w,
                           const ConvSpec& spec) {
  detail::check_layer(x, w, spec);
  const int oh = spec.out_h(), ow = spec.out_w();
  Tensor4 y(spec.n, oh, ow, spec.k);

  parallel_for(std::int64_t(spec.n) * spec.k, [&](std::int64_t task) {
    const int ni = int(task / spec.k);
    const int ki = int(task % spec.k);
    std::uint64_t muls = 0;
    for (int i = 0; i < oh; ++i)
      for (int j = 0; j < ow; ++j) {
        float acc = 0.0f;
        for (int ci = 0; ci < spec.c; ++ci)
          for (int ri = 0; ri < ConvSpec::r; ++ri)
            for (int si = 0; si < ConvSpec::s; ++si) {
              const int xi = i + ri - spec.pad;
              const int xj = j + si - spec.pad;
              const float xv = (xi >= 0 && xi < x.h && xj >= 0 && xj < x.w)
                                   ? x.at(ni, xi, xj, ci)
                                   : 0.0f;
              acc += xv * w.at(ki, ri, si, ci);
              ++muls;
            }
        y.at(ni, i, j, ki) = acc;
      }
    add_multiplies(muls);
  });
  return y;
}

// Quantized correlation: per channel, quantize the padded image plane and
// the 3x3 filter slice (one parameter pair each), correlate in integers,
// de-quantize with the zero-point correction, then sum channels. Bit-width
// 32 keeps that operand in full precision.
inline Tensor4 quantized_direct_conv(const Tensor4& x, const FilterBank& w,
                                     const ConvSpec& spec,
                                     const LanceConfig& cfg) {
  detail::check_layer(x, w, spec);
  cfg.validate();
  const int oh = spec.out_h(), ow = spec.out_w();
  const int hp = spec.h + 2 * spec.pad, wp = spec.w + 2 * spec.pad;
  const bool integer_path = cfg.bits_i <= 8 && cfg.bits_w <= 8;

  // Padded image planes, one per (image, channel).
  std::vector<float> planes(std::size_t(spec.n) * spec.c * hp * wp, 0.0f);
  auto plane = [&](int ni, int ci) {
    return planes.data() + (std::size_t(ni) * spec.c + ci) * hp * wp;
  };
  for (int ni = 0; ni < spec.n; ++ni)
    for (int hi = 0; hi < spec.h; ++hi)
      for (int wi = 0; wi < spec.w; ++wi)
        for (int ci = 0; ci < spec.c; ++ci)
          plane(ni, ci)[(hi + spec.pad) * wp + (wi + spec.pad)] =
              x.at(ni, hi, wi, ci);

  // Quantize planes and filter slices (or de-quantize back to floats for the
  // mixed-precision path, which keeps the quantization error of the
  // quantized operand).
  const std::size_t plane_count = std::size_t(spec.n) * spec.c;
  std::vector<QuantParams> xparams(cfg.bits_i <= 8 ? plane_count : 0);
  std::vector<std::uint8_t> xcodes(cfg.bits_i <= 8 ? planes.size() : 0);
  if (cfg.bits_i <= 8) {
    for (std::size_t pidx = 0; pidx < plane_count; ++pidx) {
      const std::span<const float> view(planes.data() + pidx * hp * wp,
                                        std::size_t(hp) * wp);
      xparams[pidx] = fit_params(view, cfg.bits_i);
      for (std::size_t i = 0; i < view.size(); ++i)
        xcodes[pidx * hp * wp + i] = quantize(view[i], xparams[pidx]);
      if (!integer_path)
        for (std::size_t i = 0; i < view.size(); ++i)
          planes[pidx * hp * wp + i] =
              dequantize(xcodes[pidx * hp * wp + i], xparams[pidx]);
    }
  }

  const std::size_t slice_count = std::size_t(spec.k) * spec.c;
  std::vector<QuantParams> wparams(cfg.bits_w <= 8 ? slice_count : 0);
  std::vector<std::uint8_t> wcodes(cfg.bits_w <= 8 ? slice_count * 9 : 0);
  std::vector<std::int32_t> wsums(cfg.bits_w <= 8 ? slice_count : 0, 0);
  std::vector<float> wfloat(slice_count * 9);
  for (int ki = 0; ki < spec.k; ++ki)
    for (int ci = 0; ci < spec.c; ++ci) {
      const std::size_t sidx = std::size_t(ki) * spec.c + ci;
      for (int ri = 0; ri < 3; ++ri)
        for (int si = 0; si < 3; ++si)
          wfloat[sidx * 9 + ri * 3 + si] = w.at(ki, ri, si, ci);
      if (cfg.bits_w <= 8) {
        const std::span<const float> view(wfloat.data() + sidx * 9, 9);
        wparams[sidx] = fit_params(view, cfg.bits_w);
        for (int i = 0; i < 9; ++i) {
          wcodes[sidx * 9 + i] = quantize(view[i], wparams[sidx]);
          wsums[sidx] += wcodes[sidx * 9 + i];
        }
        if (!integer_path)
          for (int i = 0; i < 9; ++i)
            wfloat[sidx * 9 + i] = dequantize(wcodes[sidx * 9 + i], wparams[sidx]);
      }
    }

  Tensor4 y(spec.n, oh, ow, spec.k);
  parallel_for(std::int64_t(spec.n) * spec.k, [&](std::int64_t task) {
    const int ni = int(task / spec.k);
    const int ki = int(task % spec.k);
    std::uint64_t muls = 0;
    for (int i = 0; i < oh; ++i)
      for (int j = 0; j < ow; ++j) {
        float acc = 0.0f;
        for (int ci = 0; ci < spec.c; ++ci) {
          const std::size_t pidx = std::size_t(ni) * spec.c + ci;
          const std::size_t sidx = std::size_t(ki) * spec.c + ci;
          if (integer_path) {
            const std::uint8_t* xc = xcodes.data() + pidx * hp * wp;
            const std::uint8_t* wc = wcodes.data() + sidx * 9;
            std::int32_t dot = 0, xsum = 0;
            for (int ri = 0; ri < 3; ++ri)
              for (int si = 0; si < 3; ++si) {
                const std::int32_t xv = xc[(i + ri) * wp + (j + si)];
                dot += xv * std::int32_t(wc[ri * 3 + si]);
                xsum += xv;
                ++muls;
              }
            acc += affine_term(dot, xsum, wsums[sidx], 9, xparams[pidx],
                               wparams[sidx]);
          } else {
            const float* xf = plane(ni, ci);
            const float* wf = wfloat.data() + sidx * 9;
            float dot = 0.0f;
            for (int ri = 0; ri < 3; ++ri)
              for (int si = 0; si < 3; ++si) {
                dot += xf[(i + ri) * wp + (j + si)] * wf[ri * 3 + si];
                ++muls;
              }
            acc += dot;
          }
        }
        y.at(ni, i, j, ki) = acc;
      }
    add_multiplies(muls);
  });
  return y;
}

// Full-precision F(2x2,3x3): transform filters once, transform tiles,
// Hadamard product, channel sum in the transform domain, inverse transform,
// merge.
inline Tensor4 winograd_conv_fp(const Tensor4& x, const FilterBank& w,
                                const ConvSpec& spec) {
  detail::check_layer(x, w, spec);
  const WinogradBasis& basis = basis_f2x2_3x3();
  const TileSet tiles = extract_tiles(x, basis.m, basis.r, spec.pad);
  const DomainTensor v = detail::domain_from_tiles(tiles, basis);
  const DomainTensor u = detail::domain_from_filters(w, basis);

  TileSet out = detail::make_output_tiles(spec);
  parallel_for(std::int64_t(v.rows) * spec.k, [&](std::int64_t task) {
    const int row = int(task / spec.k);
    const int ki = int(task % spec.k);
    float m[16] = {};
    std::uint64_t muls = 0;
    for (int ci = 0; ci < spec.c; ++ci)
      for (int p = 0; p < 16; ++p) {
        m[p] += u.at(p, ci, ki) * v.at(p, row, ci);
        ++muls;
      }
    detail::emit_output_tile(m, row, ki, basis, out);
    add_multiplies(muls);
  });
  return merge_tiles(out, spec.out_h(), spec.out_w());
}

// Quantized transform-domain convolution, channel-at-a-time: for every
// (filter, tile, channel) the transformed operands are quantized at the
// configured granularity, multiplied in integers, de-quantized, and summed
// over channels in ascending order before the inverse transform.
inline Tensor4 lance_faithful(const Tensor4& x, const FilterBank& w,
                              const ConvSpec& spec, const LanceConfig& cfg) {
  detail::check_layer(x, w, spec);
  cfg.validate();
  const WinogradBasis& basis = basis_f2x2_3x3();
  const TileSet tiles = extract_tiles(x, basis.m, basis.r, spec.pad);
  const DomainTensor v = detail::domain_from_tiles(tiles, basis);
  const DomainTensor u = detail::domain_from_filters(w, basis);

  const bool qi = cfg.bits_i <= 8;
  const bool qw = cfg.bits_w <= 8;
  QuantizedDomain vq, uq;
  if (qi) vq = quantize_domain(v, cfg.bits_i, cfg.granularity);
  if (qw) uq = quantize_domain(u, cfg.bits_w, cfg.granularity);

  TileSet out = detail::make_output_tiles(spec);
  parallel_for(std::int64_t(v.rows) * spec.k, [&](std::int64_t task) {
    const int row = int(task / spec.k);
    const int ki = int(task % spec.k);
    float m[16] = {};
    std::uint64_t muls = 0;
    for (int ci = 0; ci < spec.c; ++ci)
      for (int p = 0; p < 16; ++p) {
        float term;
        if (qi && qw) {
          const std::int32_t vc = vq.code_at(p, row, ci);
          const std::int32_t uc = uq.code_at(p, ci, ki);
          term = affine_term(vc * uc, vc, uc, 1, vq.param_at(p, row, ci),
                             uq.param_at(p, ci, ki));
        } else if (qi) {
          term = dequantize(vq.code_at(p, row, ci), vq.param_at(p, row, ci)) *
                 u.at(p, ci, ki);
        } else if (qw) {
          term = v.at(p, row, ci) *
                 dequantize(uq.code_at(p, ci, ki), uq.param_at(p, ci, ki));
        } else {
          term = v.at(p, row, ci) * u.at(p, ci, ki);
        }
        m[p] += term;
        ++muls;
      }
    detail::emit_output_tile(m, row, ki, basis, out);
    add_multiplies(muls);
  });
  return merge_tiles(out, spec.out_h(), spec.out_w());
}

// Batched variant: one integer GEMM of [tiles x C] by [C x K] codes per
// transform-domain position, with de-quantization and channel summation
// fused by the affine correction. Numerically equal to lance_faithful at the
// same granularity up to float summation order, and exactly equal for C = 1.
inline Tensor4 lance_gemm(const Tensor4& x, const FilterBank& w,
                          const ConvSpec& spec, const LanceConfig& cfg) {
  detail::check_layer(x, w, spec);
  cfg.validate();
  if (cfg.mode != LanceMode::Gemm)
    throw std::invalid_argument("lance_gemm: cfg.mode must be Gemm");
  if (spec.c > kMaxAccumDepth)
    throw std::invalid_argument("lance_gemm: channel count exceeds GEMM depth bound");

  const WinogradBasis& basis = basis_f2x2_3x3();
  const TileSet tiles = extract_tiles(x, basis.m, basis.r, spec.pad);
  const DomainTensor v = detail::domain_from_tiles(tiles, basis);
  const DomainTensor u = detail::domain_from_filters(w, basis);
  const QuantizedDomain vq = quantize_domain(v, cfg.bits_i, cfg.granularity);
  const QuantizedDomain uq = quantize_domain(u, cfg.bits_w, cfg.granularity);

  const std::size_t vslice = std::size_t(v.rows) * v.cols;
  const std::size_t uslice = std::size_t(u.rows) * u.cols;
  std::vector<Matrix<float>> per_position(16);
  parallel_for(16, [&](std::int64_t p) {
    CodeMatrix a;
    a.rows = v.rows;
    a.cols = v.cols;
    a.codes.assign(vq.codes.begin() + std::size_t(p) * vslice,
                   vq.codes.begin() + std::size_t(p + 1) * vslice);
    a.params = vq.param_at(int(p), 0, 0);
    CodeMatrix b;
    b.rows = u.rows;
    b.cols = u.cols;
    b.codes.assign(uq.codes.begin() + std::size_t(p) * uslice,
                   uq.codes.begin() + std::size_t(p + 1) * uslice);
    b.params = uq.param_at(int(p), 0, 0);
    per_position[std::size_t(p)] = affine_gemm(a, b);
  });

  TileSet out = detail::make_output_tiles(spec);
  parallel_for(std::int64_t(v.rows) * spec.k, [&](std::int64_t task) {
    const int row = int(task / spec.k);
    const int ki = int(task % spec.k);
    float m[16];
    for (int p = 0; p < 16; ++p) m[p] = per_position[std::size_t(p)].at(row, ki);
    detail::emit_output_tile(m, row, ki, basis, out);
  });
  return merge_tiles(out, spec.out_h(), spec.out_w());
}

// ---------------------------------------------------------------------------
// Arithmetic accounting

enum class EngineKind { Direct, QuantizedDirect, WinogradFp, LanceFaithful, LanceGemm };

inline const char* to_string(EngineKind e) {
  switch (e) {
    case EngineKind::Direct: return "direct";
    case EngineKind::QuantizedDirect: return "quantized-direct";
    case EngineKind::WinogradFp: return "winograd";
    case EngineKind::LanceFaithful: return "lance-faithful";
    default: return "lance-gemm";
  }
}

inline bool is_winograd_engine(EngineKind e) {
  return e == EngineKind::WinogradFp || e == EngineKind::LanceFaithful ||
         e == EngineKind::LanceGemm;
}

// Product-stage multiply counts. Adds (and transform-stage shifts) are
// deliberately not counted; `waste` flags layers whose ceil-rounded tile
// grid computes outputs that merge then discards.
struct ArithmeticReport {
  std::uint64_t multiplies = 0;
  bool adds_ignored = true;
  double ratio_vs_direct = 1.0;
  bool waste = false;
};

inline std::uint64_t direct_multiply_count(const ConvSpec& spec) {
  return std::uint64_t(spec.n) * spec.k * spec.c * spec.out_h() * spec.out_w() *
         ConvSpec::r * ConvSpec::s;
}

inline std::uint64_t winograd_multiply_count(const ConvSpec& spec) {
  return std::uint64_t(16) * spec.tiles_per_image() * spec.n * spec.c * spec.k;
}

inline ArithmeticReport arithmetic_report(const ConvSpec& spec, EngineKind engine) {
  spec.validate();
  ArithmeticReport rep;
  const std::uint64_t direct = direct_multiply_count(spec);
  if (is_winograd_engine(engine)) {
    rep.multiplies = winograd_multiply_count(spec);
    rep.ratio_vs_direct = double(direct) / double(rep.multiplies);
    rep.waste = (spec.out_h() % 2 != 0) || (spec.out_w() % 2 != 0);
  } else {
    rep.multiplies = direct;
    rep.ratio_vs_direct = 1.0;
  }
  return rep;
}

inline Tensor4 run_engine(EngineKind engine, const Tensor4& x, const FilterBank& w,
                          const ConvSpec& spec, const LanceConfig& cfg) {
  switch (engine) {
    case EngineKind::Direct: return direct_conv(x, w, spec);
    case EngineKind::QuantizedDirect: return quantized_direct_conv(x, w, spec, cfg);
    case EngineKind::WinogradFp: return winograd_conv_fp(x, w, spec);
    case EngineKind::LanceFaithful: return lance_faithful(x, w, spec, cfg);
    default: return lance_gemm(x, w, spec, cfg);
  }
}

}  // namespace lance
