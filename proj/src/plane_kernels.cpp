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

#include <algorithm>
#include <cstddef>

namespace ppa::kernels {
namespace {

struct Step {
  int rows;
  int cols;
};

Step step_of(Direction dir) {
  switch (dir) {
    case Direction::North: return {-1, 0};
    case Direction::South: return {1, 0};
    case Direction::East: return {0, 1};
    case Direction::West: return {0, -1};
  }
  return {0, 0};
}

// Fills one destination row with the source row translated by `col_step`
// (data moves toward increasing column for +1). `src_row` may be null, in
// which case the whole row comes from `fill`.
inline void translate_row(const std::uint8_t* src_row, std::uint8_t* out,
                          int width, int col_step, std::uint8_t fill) {
  if (src_row == nullptr) {
    std::fill(out, out + width, fill);
    return;
  }
  if (col_step == 0) {
    std::copy(src_row, src_row + width, out);
  } else if (col_step > 0) {
    out[0] = fill;
    std::copy(src_row, src_row + width - 1, out + 1);
  } else {
    std::copy(src_row + 1, src_row + width, out);
    out[width - 1] = fill;
  }
}

}  // namespace

void masked_shift(std::span<const std::uint8_t> src,
                  std::span<std::uint8_t> dst,
                  std::span<const std::uint8_t> mask, ArrayGeometry geometry,
                  Direction dir, std::uint8_t fill) {
  const int height = geometry.height;
  const int width = geometry.width;
  const Step step = step_of(dir);
  const std::uint8_t* in = src.data();
  const std::uint8_t* flag = mask.data();
  std::uint8_t* out = dst.data();

#pragma omp parallel for schedule(static)
  for (int r = 0; r < height; ++r) {
    const std::size_t row_off = static_cast<std::size_t>(r) * width;
    const int src_r = r - step.rows;
    const std::uint8_t* src_row =
        (src_r >= 0 && src_r < height)
            ? in + static_cast<std::size_t>(src_r) * width
            : nullptr;
    std::uint8_t* out_row = out + row_off;
    translate_row(src_row, out_row, width, step.cols, fill);
    const std::uint8_t* keep = in + row_off;
    const std::uint8_t* m = flag + row_off;
    for (int c = 0; c < width; ++c) {
      out_row[c] = m[c] ? out_row[c] : keep[c];
    }
  }
}

void shift_bits(std::span<const std::uint8_t> src, std::span<std::uint8_t> dst,
                ArrayGeometry geometry, Direction dir) {
  const int height = geometry.height;
  const int width = geometry.width;
  const Step step = step_of(dir);
  const std::uint8_t* in = src.data();
  std::uint8_t* out = dst.data();

#pragma omp parallel for schedule(static)
  for (int r = 0; r < height; ++r) {
    const int src_r = r - step.rows;
    const std::uint8_t* src_row =
        (src_r >= 0 && src_r < height)
            ? in + static_cast<std::size_t>(src_r) * width
            : nullptr;
    translate_row(src_row, out + static_cast<std::size_t>(r) * width, width,
                  step.cols, 0);
  }
}

void masked_copy(std::span<const std::uint8_t> src,
                 std::span<std::uint8_t> dst,
                 std::span<const std::uint8_t> mask) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(dst.size());
  const std::uint8_t* in = src.data();
  const std::uint8_t* m = mask.data();
  std::uint8_t* out = dst.data();

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = m[i] ? in[i] : out[i];
  }
}

}  // namespace ppa::kernels
