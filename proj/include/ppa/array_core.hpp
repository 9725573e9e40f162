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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ppa/image.hpp"

namespace ppa {

// Array size in processing elements. Both extents are even and >= 4 so the
// transform kernels can split the array into equal halves about its center.
struct ArrayGeometry {
  int height = 256;
  int width = 256;

  // Validating factory; throws GeometryError.
  static ArrayGeometry make(int height, int width);

  int half_height() const { return height / 2; }
  int half_width() const { return width / 2; }
  std::size_t cells() const {
    return static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  }
  bool operator==(const ArrayGeometry&) const = default;
};

// NORTH is toward row 0, WEST toward column 0. Shifting in a direction moves
// data that way.
enum class Direction { North, South, East, West };

Direction opposite(Direction dir);
std::string_view to_string(Direction dir);

enum class AnalogReg { A, B, C, D, E, F };
enum class BinaryReg { S0, S1, S2, S3, S4, S5, S6 };

inline constexpr std::size_t kAnalogRegCount = 6;
inline constexpr std::size_t kBinaryRegCount = 7;

std::string_view to_string(AnalogReg reg);
// Throws PlaneNameError for anything other than "A".."F".
AnalogReg parse_analog_reg(std::string_view name);

// Saturating 8-bit plane modelling one analog register across the array.
class AnalogPlane {
 public:
  AnalogPlane() = default;
  explicit AnalogPlane(ArrayGeometry geometry, std::uint8_t fill = 0);

  const ArrayGeometry& geometry() const { return geometry_; }
  std::uint8_t at(int row, int col) const { return values_[index(row, col)]; }
  // Out-of-range values clamp to [0, 255].
  void set(int row, int col, int value);

  std::span<const std::uint8_t> values() const { return values_; }
  std::span<std::uint8_t> values() { return values_; }

  bool operator==(const AnalogPlane&) const = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * geometry_.width + col;
  }

  ArrayGeometry geometry_{};
  std::vector<std::uint8_t> values_;
};

// One bit per PE, stored as a byte holding 0 or 1.
class BinaryPlane {
 public:
  BinaryPlane() = default;
  explicit BinaryPlane(ArrayGeometry geometry, bool fill = false);

  const ArrayGeometry& geometry() const { return geometry_; }
  bool at(int row, int col) const { return bits_[index(row, col)] != 0; }
  void set(int row, int col, bool value) {
    bits_[index(row, col)] = value ? 1 : 0;
  }
  std::size_t count() const;

  std::span<const std::uint8_t> bits() const { return bits_; }
  std::span<std::uint8_t> bits() { return bits_; }

  bool operator==(const BinaryPlane&) const = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * geometry_.width + col;
  }

  ArrayGeometry geometry_{};
  std::vector<std::uint8_t> bits_;
};

enum class OpClass {
  AnalogShift,
  FlagShift,
  FlagSetRegion,
  FlagClearAll,
  PlaneCopy,
  PlaneLoad,
  PlaneRead,
};

inline constexpr std::size_t kOpClassCount = 7;
inline constexpr std::array<OpClass, kOpClassCount> kAllOpClasses = {
    OpClass::AnalogShift, OpClass::FlagShift, OpClass::FlagSetRegion,
    OpClass::FlagClearAll, OpClass::PlaneCopy, OpClass::PlaneLoad,
    OpClass::PlaneRead};

std::string_view to_string(OpClass op);
std::optional<OpClass> parse_op_class(std::string_view name);

// Per-class instruction counters. Every executed array operation bumps
// exactly one counter by one.
class InstructionTrace {
 public:
  void record(OpClass op) { ++counts_[static_cast<std::size_t>(op)]; }
  std::uint64_t count(OpClass op) const {
    return counts_[static_cast<std::size_t>(op)];
  }
  std::uint64_t total() const;

  // Counts accumulated since `earlier`. Requires earlier <= *this per class.
  InstructionTrace since(const InstructionTrace& earlier) const;

  bool operator==(const InstructionTrace&) const = default;

 private:
  std::array<std::uint64_t, kOpClassCount> counts_{};
};

// Inclusive index range [first, last].
struct IndexRange {
  int first = 0;
  int last = 0;
};

// Full machine state of the simulated pixel processor array.
//
// Operations mutate the state in place and are deterministic. Analog
// instructions are gated by FLAG; FLAG manipulation is unconditional.
class ArrayState {
 public:
  explicit ArrayState(ArrayGeometry geometry = {}, std::uint8_t background = 0);

  const ArrayGeometry& geometry() const { return geometry_; }
  std::uint8_t background() const { return background_; }
  void set_background(std::uint8_t value) { background_ = value; }

  const AnalogPlane& analog(AnalogReg reg) const {
    return analog_[static_cast<std::size_t>(reg)];
  }
  const BinaryPlane& binary(BinaryReg reg) const {
    return binary_[static_cast<std::size_t>(reg)];
  }
  const BinaryPlane& flag() const { return flag_; }
  const InstructionTrace& trace() const { return trace_; }
  void reset_trace() { trace_ = {}; }

  void clear_flag_all();
  // Sets FLAG on every PE whose row (column) lies in the range; others are
  // left as they are. Throws BoundsError for an invalid range.
  void set_flag_rows(IndexRange rows);
  void set_flag_cols(IndexRange cols);

  // Flagged PEs take the pre-update value of their neighbour on the side
  // opposite `dir`; sources outside the array yield background().
  void shift_analog(AnalogReg reg, Direction dir);
  // Unconditional shift of FLAG itself; zeros enter at the edge.
  void shift_flag(Direction dir);

  // Flagged PEs copy src into dst.
  void copy_analog(AnalogReg dst, AnalogReg src);
  void save_flag(BinaryReg dst);
  void restore_flag(BinaryReg src);

  // Host-side writes. Each counts as one plane_load.
  void load_image(AnalogReg reg, const Image& img);
  void load_flag(const BinaryPlane& bits);

  // Host-side readout; counts one plane_read.
  Image read_plane(AnalogReg reg);
  // Debug view of a plane that does not touch the trace.
  Image peek_plane(AnalogReg reg) const;

 private:
  void check_geometry(const ArrayGeometry& other, const char* what) const;

  ArrayGeometry geometry_;
  std::uint8_t background_;
  std::array<AnalogPlane, kAnalogRegCount> analog_;
  std::array<BinaryPlane, kBinaryRegCount> binary_;
  BinaryPlane flag_;
  InstructionTrace trace_;
  // Double buffers for synchronous updates.
  std::vector<std::uint8_t> analog_scratch_;
  std::vector<std::uint8_t> flag_scratch_;
};

}  // namespace ppa
