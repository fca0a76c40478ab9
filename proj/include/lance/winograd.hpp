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

#include <stdexcept>

#include "lance/matrix.hpp"

namespace lance {

// Minimal-filtering transform set for F(m x m, r x r). An m x m output tile
// is produced from an (m+r-1)-sided input tile with (m+r-1)^2 multiplies:
//
//   S = At [ (G g Gt) .* (Bt d B) ] A
//
// Only F(2x2, 3x3) is provided. The matrices are hardcoded constants; their
// correctness is enforced by the correlation-oracle check in verify.hpp
// rather than by a generator.
struct WinogradBasis {
  int m = 0;      // output tile side
  int r = 0;      // filter side
  int alpha = 0;  // input tile side, m + r - 1
  MatF g_mat;     // alpha x r
  MatF bt_mat;    // alpha x alpha
  MatF at_mat;    // m x alpha
};

inline const WinogradBasis& basis_f2x2_3x3() {
  static const WinogradBasis basis{
      2, 3, 4,
      MatF{{1.0f, 0.0f, 0.0f},
           {0.5f, 0.5f, 0.5f},
           {0.5f, -0.5f, 0.5f},
           {0.0f, 0.0f, 1.0f}},
      MatF{{1.0f, 0.0f, -1.0f, 0.0f},
           {0.0f, 1.0f, 1.0f, 0.0f},
           {0.0f, -1.0f, 1.0f, 0.0f},
           {0.0f, 1.0f, 0.0f, -1.0f}},
      MatF{{1.0f, 1.0f, 1.0f, 0.0f},
           {0.0f, 1.0f, -1.0f, -1.0f}}};
  return basis;
}

namespace detail {

// t x tT, the two-sided application shared by all three transforms.
inline MatF two_sided(const MatF& t, const MatF& x) {
  return matmul(matmul(t, x), transpose(t));
}

}  // namespace detail

// Bt d B: input tile into the transform domain.
inline MatF transform_input(const MatF& d, const WinogradBasis& basis) {
  if (d.rows() != basis.alpha || d.cols() != basis.alpha)
    throw std::invalid_argument("transform_input: tile side must equal alpha");
  return detail::two_sided(basis.bt_mat, d);
}

// G g Gt: filter into the transform domain.
inline MatF transform_filter(const MatF& g, const WinogradBasis& basis) {
  if (g.rows() != basis.r || g.cols() != basis.r)
    throw std::invalid_argument("transform_filter: filter side must equal r");
  return detail::two_sided(basis.g_mat, g);
}

// At m A: accumulated domain tile back to an m x m output tile.
inline MatF transform_output(const MatF& m_dom, const WinogradBasis& basis) {
  if (m_dom.rows() != basis.alpha || m_dom.cols() != basis.alpha)
    throw std::invalid_argument("transform_output: tile side must equal alpha");
  return detail::two_sided(basis.at_mat, m_dom);
}

}  // namespace lance
