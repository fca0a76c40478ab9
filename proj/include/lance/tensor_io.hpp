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

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "lance/tensor.hpp"

namespace lance {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// LTEN tensor file, little-endian, no alignment padding:
//   "LTEN" | u16 version = 1 | u8 dtype (0 = fp32) | 4 x u64 dims N,H,W,C |
//   N*H*W*C fp32 payload, row-major NHWC.
// Floats travel as raw bit patterns, so NaN payloads survive round-trips.
inline constexpr char kTensorMagic[4] = {'L', 'T', 'E', 'N'};
inline constexpr std::uint16_t kTensorFormatVersion = 1;
inline constexpr std::uint8_t kDtypeF32 = 0;

namespace detail {

inline void put_u16le(std::ostream& os, std::uint16_t v) {
  const char b[2] = {char(v & 0xff), char(v >> 8)};
  os.write(b, 2);
}

inline void put_u64le(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = char((v >> (8 * i)) & 0xff);
  os.write(b, 8);
}

inline void put_f32le(std::ostream& os, float f) {
  const auto bits = std::bit_cast<std::uint32_t>(f);
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = char((bits >> (8 * i)) & 0xff);
  os.write(b, 4);
}

inline void read_exact(std::istream& is, char* out, std::size_t count,
                       const char* what) {
  is.read(out, std::streamsize(count));
  if (std::size_t(is.gcount()) != count)
    throw FormatError(std::string("tensor stream: truncated ") + what);
}

inline std::uint16_t get_u16le(std::istream& is, const char* what) {
  unsigned char b[2];
  read_exact(is, reinterpret_cast<char*>(b), 2, what);
  return std::uint16_t(b[0] | (b[1] << 8));
}

inline std::uint64_t get_u64le(std::istream& is, const char* what) {
  unsigned char b[8];
  read_exact(is, reinterpret_cast<char*>(b), 8, what);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return v;
}

inline float get_f32le(std::istream& is, const char* what) {
  unsigned char b[4];
  read_exact(is, reinterpret_cast<char*>(b), 4, what);
  std::uint32_t bits = 0;
  for (int i = 0; i < 4; ++i) bits |= std::uint32_t(b[i]) << (8 * i);
  return std::bit_cast<float>(bits);
}

}  // namespace detail

inline void write_tensor(const Tensor4& t, std::ostream& os) {
  os.write(kTensorMagic, 4);
  detail::put_u16le(os, kTensorFormatVersion);
  os.put(char(kDtypeF32));
  detail::put_u64le(os, std::uint64_t(t.n));
  detail::put_u64le(os, std::uint64_t(t.h));
  detail::put_u64le(os, std::uint64_t(t.w));
  detail::put_u64le(os, std::uint64_t(t.c));
  for (float v : t.data) detail::put_f32le(os, v);
  if (!os) throw FormatError("tensor stream: write failed");
}

inline Tensor4 read_tensor(std::istream& is) {
  char magic[4];
  detail::read_exact(is, magic, 4, "header");
  if (magic[0] != 'L' || magic[1] != 'T' || magic[2] != 'E' || magic[3] != 'N')
    throw FormatError("tensor stream: bad magic");
  const std::uint16_t version = detail::get_u16le(is, "header");
  if (version != kTensorFormatVersion)
    throw FormatError("tensor stream: unsupported format version");
  const int dtype = is.get();
  if (dtype == std::istream::traits_type::eof())
    throw FormatError("tensor stream: truncated header");
  if (dtype != kDtypeF32)
    throw FormatError("tensor stream: unsupported dtype code");

  std::uint64_t dims[4];
  for (auto& d : dims) d = detail::get_u64le(is, "header");

  std::uint64_t total = 1;
  for (auto d : dims) {
    if (d < 1 || d > std::uint64_t(std::numeric_limits<int>::max()))
      throw FormatError("tensor stream: dimension overflow");
    if (total > (std::uint64_t(1) << 31) / d)
      throw FormatError("tensor stream: dimension overflow");
    total *= d;
  }

  Tensor4 t(static_cast<int>(dims[0]), static_cast<int>(dims[1]),
            static_cast<int>(dims[2]), static_cast<int>(dims[3]));
  for (auto& v : t.data) v = detail::get_f32le(is, "payload");
  return t;
}

inline void write_tensor_file(const Tensor4& t, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FormatError("cannot open for writing: " + path);
  write_tensor(t, os);
}

inline Tensor4 read_tensor_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open: " + path);
  return read_tensor(is);
}

}  // namespace lance
