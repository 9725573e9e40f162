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

#include "ppa/patterns.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ppa/errors.hpp"

namespace ppa {

PatternKind parse_pattern_kind(std::string_view name) {
  if (name == "checkerboard") return PatternKind::Checkerboard;
  if (name == "disk") return PatternKind::Disk;
  if (name == "gradient") return PatternKind::Gradient;
  if (name == "unique-columns") return PatternKind::UniqueColumns;
  throw ParameterError("unknown pattern kind '" + std::string(name) + "'");
}

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::Checkerboard: return "checkerboard";
    case PatternKind::Disk: return "disk";
    case PatternKind::Gradient: return "gradient";
    case PatternKind::UniqueColumns: return "unique-columns";
  }
  return "?";
}

Image make_pattern(PatternKind kind, int height, int width) {
  Image img(height, width);
  const int radius = std::min(height, width) / 4;
  const int span = std::max(1, height + width - 2);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      int value = 0;
      switch (kind) {
        case PatternKind::Checkerboard:
          value = (r + c) % 2 == 1 ? 255 : 0;
          break;
        case PatternKind::Disk: {
          // Pixel centers, so the disk is symmetric about both center lines.
          const int dy = 2 * r + 1 - height;
          const int dx = 2 * c + 1 - width;
          value = dx * dx + dy * dy <= 4 * radius * radius ? 255 : 0;
          break;
        }
        case PatternKind::Gradient:
          value = (r + c) * 255 / span;
          break;
        case PatternKind::UniqueColumns:
          value = c % 256;
          break;
      }
      img.set(r, c, value);
    }
  }
  return img;
}

Image make_random_image(int height, int width, std::uint64_t seed) {
  Image img(height, width);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(dist(rng));
  return img;
}

}  // namespace ppa
