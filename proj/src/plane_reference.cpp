//
// Copyright 2026 The ppa-transforms Authors
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
//

#include "ppa/plane_kernels.hpp"

namespace ppa::reference {
namespace {

// Source coordinate of the PE that feeds (row, col) when data moves in `dir`.
void source_of(Direction dir, int row, int col, int& src_row, int& src_col) {
  src_row = row;
  src_col = col;
  switch (dir) {
    case Direction::North: src_row = row + 1; break;
    case Direction::South: src_row = row - 1; break;
    case Direction::East: src_col = col - 1; break;
    case Direction::West: src_col = col + 1; break;
  }
}

}  // namespace

void masked_shift(std::span<const std::uint8_t> src,
                  std::span<std::uint8_t> dst,
                  std::span<const std::uint8_t> mask, ArrayGeometry geometry,
                  Direction dir, std::uint8_t fill) {
  const int h = geometry.height;
  const int w = geometry.width;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::size_t p = static_cast<std::size_t>(r) * w + c;
      if (!mask[p]) {
        dst[p] = src[p];
        continue;
      }
      int sr = 0;
      int sc = 0;
      source_of(dir, r, c, sr, sc);
      const bool inside = sr >= 0 && sr < h && sc >= 0 && sc < w;
      dst[p] = inside ? src[static_cast<std::size_t>(sr) * w + sc] : fill;
    }
  }
}

void shift_bits(std::span<const std::uint8_t> src, std::span<std::uint8_t> dst,
                ArrayGeometry geometry, Direction dir) {
  const int h = geometry.height;
  const int w = geometry.width;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      int sr = 0;
      int sc = 0;
      source_of(dir, r, c, sr, sc);
      const bool inside = sr >= 0 && sr < h && sc >= 0 && sc < w;
      dst[static_cast<std::size_t>(r) * w + c] =
          inside ? src[static_cast<std::size_t>(sr) * w + sc] : 0;
    }
  }
}

void masked_copy(std::span<const std::uint8_t> src,
                 std::span<std::uint8_t> dst,
                 std::span<const std::uint8_t> mask) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (mask[i]) dst[i] = src[i];
  }
}

}  // namespace ppa::reference
