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

#include "ppa/image.hpp"

#include <string>

#include "ppa/errors.hpp"

namespace ppa {

Image::Image(int height, int width, std::uint8_t background)
    : height_(height), width_(width), background_(background) {
  if (height <= 0 || width <= 0) {
    throw GeometryError("image geometry must be positive, got " +
                        std::to_string(height) + "x" + std::to_string(width));
  }
  pixels_.assign(static_cast<std::size_t>(height) * width, 0);
}

Image Image::from_values(int height, int width, std::span<const int> values,
                         std::uint8_t background) {
  Image img(height, width, background);
  if (values.size() != img.pixels_.size()) {
    throw GeometryError("expected " + std::to_string(img.pixels_.size()) +
                        " values, got " + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > 255) {
      throw ValueError("pixel value " + std::to_string(values[i]) +
                       " outside [0, 255]");
    }
    img.pixels_[i] = static_cast<std::uint8_t>(values[i]);
  }
  return img;
}

void Image::set(int row, int col, int value) {
  if (value < 0 || value > 255) {
    throw ValueError("pixel value " + std::to_string(value) +
                     " outside [0, 255]");
  }
  pixels_[static_cast<std::size_t>(row) * width_ + col] =
      static_cast<std::uint8_t>(value);
}

Image Image::transposed() const {
  Image out(width_, height_, background_);
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      out.pixels_[static_cast<std::size_t>(c) * height_ + r] = at(r, c);
    }
  }
  return out;
}

}  // namespace ppa
