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

#include "ppa/array_core.hpp"

#include <algorithm>
#include <string>

#include "ppa/errors.hpp"
#include "ppa/plane_kernels.hpp"

namespace ppa {

ArrayGeometry ArrayGeometry::make(int height, int width) {
  if (height < 4 || width < 4 || height % 2 != 0 || width % 2 != 0) {
    throw GeometryError("array geometry must be even and at least 4x4, got " +
                        std::to_string(height) + "x" + std::to_string(width));
  }
  return ArrayGeometry{height, width};
}

Direction opposite(Direction dir) {
  switch (dir) {
    case Direction::North: return Direction::South;
    case Direction::South: return Direction::North;
    case Direction::East: return Direction::West;
    case Direction::West: return Direction::East;
  }
  return dir;
}

std::string_view to_string(Direction dir) {
  switch (dir) {
    case Direction::North: return "NORTH";
    case Direction::South: return "SOUTH";
    case Direction::East: return "EAST";
    case Direction::West: return "WEST";
  }
  return "?";
}

namespace {
constexpr std::array<std::string_view, kAnalogRegCount> kAnalogNames = {
    "A", "B", "C", "D", "E", "F"};
constexpr std::array<std::string_view, kOpClassCount> kOpNames = {
    "analog_shift", "flag_shift", "flag_set_region", "flag_clear_all",
    "plane_copy",   "plane_load", "plane_read"};
}  // namespace

std::string_view to_string(AnalogReg reg) {
  return kAnalogNames[static_cast<std::size_t>(reg)];
}

AnalogReg parse_analog_reg(std::string_view name) {
  for (std::size_t i = 0; i < kAnalogNames.size(); ++i) {
    if (kAnalogNames[i] == name) return static_cast<AnalogReg>(i);
  }
  throw PlaneNameError("unknown analog plane '" + std::string(name) +
                       "' (expected A..F)");
}

std::string_view to_string(OpClass op) {
  return kOpNames[static_cast<std::size_t>(op)];
}

std::optional<OpClass> parse_op_class(std::string_view name) {
  for (std::size_t i = 0; i < kOpNames.size(); ++i) {
    if (kOpNames[i] == name) return static_cast<OpClass>(i);
  }
  return std::nullopt;
}

AnalogPlane::AnalogPlane(ArrayGeometry geometry, std::uint8_t fill)
    : geometry_(geometry), values_(geometry.cells(), fill) {}

void AnalogPlane::set(int row, int col, int value) {
  values_[index(row, col)] =
      static_cast<std::uint8_t>(std::clamp(value, 0, 255));
}

BinaryPlane::BinaryPlane(ArrayGeometry geometry, bool fill)
    : geometry_(geometry), bits_(geometry.cells(), fill ? 1 : 0) {}

std::size_t BinaryPlane::count() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t InstructionTrace::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

InstructionTrace InstructionTrace::since(const InstructionTrace& earlier) const {
  InstructionTrace out;
  for (std::size_t i = 0; i < kOpClassCount; ++i) {
    out.counts_[i] = counts_[i] - earlier.counts_[i];
  }
  return out;
}

ArrayState::ArrayState(ArrayGeometry geometry, std::uint8_t background)
    : geometry_(ArrayGeometry::make(geometry.height, geometry.width)),
      background_(background),
      flag_(geometry_),
      analog_scratch_(geometry_.cells()),
      flag_scratch_(geometry_.cells()) {
  for (auto& plane : analog_) plane = AnalogPlane(geometry_);
  for (auto& plane : binary_) plane = BinaryPlane(geometry_);
}

void ArrayState::clear_flag_all() {
  auto bits = flag_.bits();
  std::fill(bits.begin(), bits.end(), std::uint8_t{0});
  trace_.record(OpClass::FlagClearAll);
}

void ArrayState::set_flag_rows(IndexRange rows) {
  if (rows.first < 0 || rows.last < rows.first ||
      rows.last >= geometry_.height) {
    throw BoundsError("row range [" + std::to_string(rows.first) + ", " +
                      std::to_string(rows.last) + "] outside 0.." +
                      std::to_string(geometry_.height - 1));
  }
  auto bits = flag_.bits();
  const auto w = static_cast<std::size_t>(geometry_.width);
  std::fill(bits.begin() + static_cast<std::ptrdiff_t>(rows.first * w),
            bits.begin() + static_cast<std::ptrdiff_t>((rows.last + 1) * w),
            std::uint8_t{1});
  trace_.record(OpClass::FlagSetRegion);
}

void ArrayState::set_flag_cols(IndexRange cols) {
  if (cols.first < 0 || cols.last < cols.first ||
      cols.last >= geometry_.width) {
    throw BoundsError("column range [" + std::to_string(cols.first) + ", " +
                      std::to_string(cols.last) + "] outside 0.." +
                      std::to_string(geometry_.width - 1));
  }
  for (int r = 0; r < geometry_.height; ++r) {
    for (int c = cols.first; c <= cols.last; ++c) flag_.set(r, c, true);
  }
  trace_.record(OpClass::FlagSetRegion);
}

void ArrayState::shift_analog(AnalogReg reg, Direction dir) {
  auto& plane = analog_[static_cast<std::size_t>(reg)];
  kernels::masked_shift(plane.values(), analog_scratch_, flag_.bits(),
                        geometry_, dir, background_);
  auto values = plane.values();
  std::copy(analog_scratch_.begin(), analog_scratch_.end(), values.begin());
  trace_.record(OpClass::AnalogShift);
}

void ArrayState::shift_flag(Direction dir) {
  kernels::shift_bits(flag_.bits(), flag_scratch_, geometry_, dir);
  auto bits = flag_.bits();
  std::copy(flag_scratch_.begin(), flag_scratch_.end(), bits.begin());
  trace_.record(OpClass::FlagShift);
}

void ArrayState::copy_analog(AnalogReg dst, AnalogReg src) {
  if (dst != src) {
    kernels::masked_copy(analog_[static_cast<std::size_t>(src)].values(),
                         analog_[static_cast<std::size_t>(dst)].values(),
                         flag_.bits());
  }
  trace_.record(OpClass::PlaneCopy);
}

void ArrayState::save_flag(BinaryReg dst) {
  binary_[static_cast<std::size_t>(dst)] = flag_;
  trace_.record(OpClass::PlaneCopy);
}

void ArrayState::restore_flag(BinaryReg src) {
  flag_ = binary_[static_cast<std::size_t>(src)];
  trace_.record(OpClass::PlaneCopy);
}

void ArrayState::check_geometry(const ArrayGeometry& other,
                                const char* what) const {
  if (!(other == geometry_)) {
    throw GeometryError(std::string(what) + " geometry " +
                        std::to_string(other.height) + "x" +
                        std::to_string(other.width) +
                        " does not match array " +
                        std::to_string(geometry_.height) + "x" +
                        std::to_string(geometry_.width));
  }
}

void ArrayState::load_image(AnalogReg reg, const Image& img) {
  check_geometry(ArrayGeometry{img.height(), img.width()}, "image");
  auto values = analog_[static_cast<std::size_t>(reg)].values();
  const auto pixels = img.pixels();
  std::copy(pixels.begin(), pixels.end(), values.begin());
  trace_.record(OpClass::PlaneLoad);
}

void ArrayState::load_flag(const BinaryPlane& bits) {
  check_geometry(bits.geometry(), "flag");
  auto out = flag_.bits();
  const auto in = bits.bits();
  std::transform(in.begin(), in.end(), out.begin(),
                 [](std::uint8_t b) -> std::uint8_t { return b ? 1 : 0; });
  trace_.record(OpClass::PlaneLoad);
}

Image ArrayState::read_plane(AnalogReg reg) {
  Image img = peek_plane(reg);
  trace_.record(OpClass::PlaneRead);
  return img;
}

Image ArrayState::peek_plane(AnalogReg reg) const {
  Image img(geometry_.height, geometry_.width, background_);
  const auto values = analog_[static_cast<std::size_t>(reg)].values();
  auto pixels = img.pixels();
  std::copy(values.begin(), values.end(), pixels.begin());
  return img;
}

}  // namespace ppa
