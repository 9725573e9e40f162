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
#include <string_view>

#include "ppa/image.hpp"

namespace ppa {

enum class PatternKind { Checkerboard, Disk, Gradient, UniqueColumns };

// "checkerboard", "disk", "gradient", "unique-columns"; throws ParameterError.
PatternKind parse_pattern_kind(std::string_view name);
std::string_view to_string(PatternKind kind);

// Deterministic test patterns:
//  checkerboard    255 where (row + col) is odd, else 0
//  disk            255 inside a centered disk of radius min(H, W) / 4
//  gradient        diagonal ramp from 0 at the top-left to 255
//  unique-columns  column j holds j mod 256
Image make_pattern(PatternKind kind, int height, int width);

// Uniform random pixels from a fixed seed.
Image make_random_image(int height, int width, std::uint64_t seed);

}  // namespace ppa
