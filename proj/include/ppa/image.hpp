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
#include <vector>

namespace ppa {

// Plain row-major grid of 8-bit gray values. Used by the oracle, file I/O and
// as the transfer format into and out of the simulated array. Unlike the
// array, an Image may have any positive geometry.
class Image {
 public:
  Image() = default;
  Image(int height, int width, std::uint8_t background = 0);

  // Rejects any value outside [0, 255] with ValueError.
  static Image from_values(int height, int width, std::span<const int> values,
                           std::uint8_t background = 0);

  int height() const { return height_; }
  int width() const { return width_; }
  std::uint8_t background() const { return background_; }
  void set_background(std::uint8_t value) { background_ = value; }

  std::uint8_t at(int row, int col) const {
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }
  // Throws ValueError for values outside [0, 255].
  void set(int row, int col, int value);

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }

  Image transposed() const;

  // Background is metadata; equality compares geometry and pixels only.
  bool operator==(const Image& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           pixels_ == other.pixels_;
  }

 private:
  int height_ = 0;
  int width_ = 0;
  std::uint8_t background_ = 0;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace ppa
