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
#include <random>
#include <span>
#include <vector>

namespace lance {

// Seeded U(-1, 1) source for synthetic layer data. Maps the top 24 bits of
// an mt19937_64 draw, so the stream is identical on every platform (the
// standard distributions are not).
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : rng_(seed) {}

  float next() {
    const auto top = std::uint32_t(rng_() >> 40);  // [0, 2^24)
    return float(top) * (1.0f / 8388608.0f) - 1.0f;
  }

  // Uniform integer in [lo, hi].
  int next_int(int lo, int hi) {
    return lo + int(rng_() % std::uint64_t(hi - lo + 1));
  }

  void fill(std::span<float> out) {
    for (auto& v : out) v = next();
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<float> uniform_floats(std::size_t count, std::uint64_t seed) {
  std::vector<float> out(count);
  UniformSource src(seed);
  src.fill(out);
  return out;
}

}  // namespace lance
