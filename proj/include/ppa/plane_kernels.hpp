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

#pragma once

#include <cstdint>
#include <span>

#include "ppa/array_core.hpp"

// Per-PE inner loops behind ArrayState. Planes are row-major spans of
// geometry.cells() bytes. `dst` must not alias `src`.
//
// The `kernels` versions are OpenMP-parallel over rows; `reference` holds
// straightforward serial versions written directly from the per-PE
// definition. Both must produce bit-identical results.

namespace ppa::kernels {

// dst(p) = mask(p) ? src(p - step(dir)) : src(p), with `fill` for sources
// outside the array.
void masked_shift(std::span<const std::uint8_t> src,
                  std::span<std::uint8_t> dst,
                  std::span<const std::uint8_t> mask, ArrayGeometry geometry,
                  Direction dir, std::uint8_t fill);

// dst(p) = src(p - step(dir)), zero for sources outside the array.
void shift_bits(std::span<const std::uint8_t> src, std::span<std::uint8_t> dst,
                ArrayGeometry geometry, Direction dir);

// dst(p) = src(p) wherever mask(p) is set. In place on dst.
void masked_copy(std::span<const std::uint8_t> src,
                 std::span<std::uint8_t> dst,
                 std::span<const std::uint8_t> mask);

}  // namespace ppa::kernels

namespace ppa::reference {

void masked_shift(std::span<const std::uint8_t> src,
                  std::span<std::uint8_t> dst,
                  std::span<const std::uint8_t> mask, ArrayGeometry geometry,
                  Direction dir, std::uint8_t fill);

void shift_bits(std::span<const std::uint8_t> src, std::span<std::uint8_t> dst,
                ArrayGeometry geometry, Direction dir);

void masked_copy(std::span<const std::uint8_t> src,
                 std::span<std::uint8_t> dst,
                 std::span<const std::uint8_t> mask);

}  // namespace ppa::reference
