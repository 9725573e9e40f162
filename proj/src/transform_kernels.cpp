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

#include "ppa/transform_kernels.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "ppa/errors.hpp"

namespace ppa {
namespace {

std::atomic<bool> g_fault_injection{false};

// Maps a kernel written in terms of "lines" onto rows or columns of the
// array. `high` is the direction of increasing line index.
struct LineFrame {
  bool rows;

  int extent(const ArrayGeometry& g) const { return rows ? g.height : g.width; }
  void flag(ArrayState& state, IndexRange range) const {
    if (rows) {
      state.set_flag_rows(range);
    } else {
      state.set_flag_cols(range);
    }
  }
  Direction high() const { return rows ? Direction::South : Direction::East; }
  Direction low() const { return rows ? Direction::North : Direction::West; }
};

constexpr LineFrame kRows{true};
constexpr LineFrame kCols{false};

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw ParameterError(std::string(what) + " must be finite");
  }
}

void repeat_flag_shift(ArrayState& state, Direction dir, int times) {
  for (int i = 0; i < times; ++i) state.shift_flag(dir);
}

// Shears along `lines`: line i moves by r_i across the perpendicular axis,
// positive toward `plus`.
void shear_lines(ArrayState& state, AnalogReg reg, double alpha,
                 const LineFrame& lines, Direction plus) {
  require_finite(alpha, "shear factor");
  const int extent = lines.extent(state.geometry());
  const int half = extent / 2;
  const ShiftProfile profile = row_shifts(alpha, extent);
  const int steps = profile.max_magnitude;
  if (steps == 0) return;
  const std::vector<int>& r = profile.shifts;

  // |r_i| is non-increasing over the leading half and non-decreasing over the
  // trailing half, so the lines still to move form a prefix (resp. suffix).
  auto last_at_least = [&](int n) {
    int last = -1;
    for (int i = 0; i < half && std::abs(r[i]) >= n; ++i) last = i;
    return last;
  };
  auto first_at_least = [&](int n) {
    int first = extent;
    for (int i = extent - 1; i >= half && std::abs(r[i]) >= n; --i) first = i;
    return first;
  };

  const Direction lead = alpha > 0 ? plus : opposite(plus);
  const Direction trail = opposite(lead);

  if (last_at_least(1) >= 0) {
    state.clear_flag_all();
    lines.flag(state, {0, last_at_least(1)});
    for (int n = 1; n <= steps; ++n) {
      state.shift_analog(reg, lead);
      if (n == 1 && testing::fault_injection()) state.shift_analog(reg, lead);
      if (n < steps) {
        repeat_flag_shift(state, lines.low(),
                          last_at_least(n) - last_at_least(n + 1));
      }
    }
  }

  if (first_at_least(1) < extent) {
    state.clear_flag_all();
    lines.flag(state, {first_at_least(1), extent - 1});
    for (int n = 1; n <= steps; ++n) {
      state.shift_analog(reg, trail);
      if (n < steps) {
        repeat_flag_shift(state, lines.high(),
                          first_at_least(n + 1) - first_at_least(n));
      }
    }
  }
}

void require_scale_factor(double factor) {
  if (!(factor > 0.0 && factor <= 2.0)) {
    throw ParameterError("scale factor " + std::to_string(factor) +
                         " outside (0, 2]");
  }
}

void eliminate_lines(ArrayState& state, AnalogReg reg, const LineFrame& lines,
                     int half, const std::vector<int>& offsets) {
  const int extent = 2 * half;
  const int count = static_cast<int>(offsets.size());
  const bool fault = testing::fault_injection();

  // High half: flag from the target line outward, pull data toward center.
  state.clear_flag_all();
  lines.flag(state, {half + offsets[0], extent - 1});
  for (int k = 0; k < count; ++k) {
    state.shift_analog(reg, lines.low());
    if (k == 0 && fault) state.shift_analog(reg, lines.low());
    if (k + 1 < count) {
      repeat_flag_shift(state, lines.high(), offsets[k + 1] - offsets[k] - 1);
    }
  }

  state.clear_flag_all();
  lines.flag(state, {0, half - 1 - offsets[0]});
  for (int k = 0; k < count; ++k) {
    state.shift_analog(reg, lines.high());
    if (k == 0 && fault) state.shift_analog(reg, lines.high());
    if (k + 1 < count) {
      repeat_flag_shift(state, lines.low(), offsets[k + 1] - offsets[k] - 1);
    }
  }
}

void duplicate_lines(ArrayState& state, AnalogReg reg, const LineFrame& lines,
                     int half, const std::vector<int>& offsets) {
  const int extent = 2 * half;
  const int count = static_cast<int>(offsets.size());
  const bool fault = testing::fault_injection();

  // A duplication is a no-op once its source line has been pushed to the
  // outer edge; positions only grow, so the active ones form a prefix.
  int active = 0;
  while (active < count && half + offsets[active] + active < extent - 1) {
    ++active;
  }
  if (active > 0) {
    state.clear_flag_all();
    lines.flag(state, {half + offsets[0] + 1, extent - 1});
    for (int k = 0; k < active; ++k) {
      state.shift_analog(reg, lines.high());
      if (k == 0 && fault) state.shift_analog(reg, lines.high());
      if (k + 1 < active) {
        repeat_flag_shift(state, lines.high(), offsets[k + 1] - offsets[k] + 1);
      }
    }
  }

  active = 0;
  while (active < count && half - 1 - offsets[active] - active > 0) ++active;
  if (active > 0) {
    state.clear_flag_all();
    lines.flag(state, {0, half - 2 - offsets[0]});
    for (int k = 0; k < active; ++k) {
      state.shift_analog(reg, lines.low());
      if (k == 0 && fault) state.shift_analog(reg, lines.low());
      if (k + 1 < active) {
        repeat_flag_shift(state, lines.low(), offsets[k + 1] - offsets[k] + 1);
      }
    }
  }
}

void scale_lines(ArrayState& state, AnalogReg reg, double factor,
                 const LineFrame& lines) {
  require_scale_factor(factor);
  const int half = lines.extent(state.geometry()) / 2;
  if (factor == 1.0) return;
  if (factor < 1.0) {
    const EliminationParams params = elimination_params(factor, half);
    if (params.identity()) return;
    eliminate_lines(state, reg, lines, half,
                    spaced_offsets(params.removed, half));
  } else {
    duplicate_lines(state, reg, lines, half,
                    spaced_offsets(duplication_count(factor, half), half));
  }
}

}  // namespace

std::string_view to_string(Axis axis) {
  return axis == Axis::Horizontal ? "horizontal" : "vertical";
}

Axis parse_axis(std::string_view name) {
  if (name == "horizontal" || name == "h" || name == "x") {
    return Axis::Horizontal;
  }
  if (name == "vertical" || name == "v" || name == "y") return Axis::Vertical;
  throw ParameterError("unknown axis '" + std::string(name) + "'");
}

bool ShearSpec::lossy() const { return std::abs(alpha) > 1.0; }

RotationSpec RotationSpec::make(double theta) {
  require_finite(theta, "rotation angle");
  if (std::abs(theta) > std::numbers::pi / 2 + 1e-12) {
    throw ParameterError("rotation angle " + std::to_string(theta) +
                         " rad exceeds pi/2 in magnitude");
  }
  return RotationSpec{theta};
}

double RotationSpec::shear_factor() const { return -std::tan(theta / 2); }
double RotationSpec::vertical_factor() const { return std::sin(theta); }

ScaleSpec ScaleSpec::make(double sx, double sy) {
  require_scale_factor(sx);
  require_scale_factor(sy);
  return ScaleSpec{sx, sy};
}

ShiftProfile row_shifts(double alpha, int extent) {
  ShiftProfile profile;
  const int half = extent / 2;
  profile.shifts.resize(static_cast<std::size_t>(extent));
  for (int i = 0; i < extent; ++i) {
    const int r = static_cast<int>(std::ceil(alpha * (half - i)));
    profile.shifts[static_cast<std::size_t>(i)] = r;
    if (r != 0) profile.sets[r].push_back(i);
  }
  profile.max_magnitude =
      static_cast<int>(std::ceil(std::abs(alpha) * half));
  return profile;
}

EliminationParams elimination_params(double alpha, int half) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ParameterError("down-scaling factor " + std::to_string(alpha) +
                         " outside (0, 1]");
  }
  EliminationParams params;
  params.removed = half - static_cast<int>(std::ceil(alpha * half));
  if (params.removed > 0) {
    params.spacing = (half + params.removed - 1) / params.removed;
  }
  return params;
}

int duplication_count(double alpha, int half) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw ParameterError("up-scaling factor " + std::to_string(alpha) +
                         " outside (1, 2]");
  }
  return static_cast<int>(std::ceil((alpha - 1.0) * half));
}

std::vector<int> spaced_offsets(int count, int half) {
  std::vector<int> offsets;
  offsets.reserve(static_cast<std::size_t>(count));
  for (int m = 1; m <= count; ++m) {
    offsets.push_back((m * half + count - 1) / count - 1);
  }
  return offsets;
}

void shear_horizontal(ArrayState& state, AnalogReg reg, double alpha) {
  shear_lines(state, reg, alpha, kRows, Direction::East);
}

void shear_vertical(ArrayState& state, AnalogReg reg, double alpha) {
  shear_lines(state, reg, alpha, kCols, Direction::South);
}

void shear(ArrayState& state, AnalogReg reg, const ShearSpec& spec) {
  if (spec.axis == Axis::Horizontal) {
    shear_horizontal(state, reg, spec.alpha);
  } else {
    shear_vertical(state, reg, spec.alpha);
  }
}

void rotate(ArrayState& state, AnalogReg reg, double theta,
            const StageObserver& observer) {
  const RotationSpec spec = RotationSpec::make(theta);
  const double outer = spec.shear_factor();
  shear_horizontal(state, reg, outer);
  if (observer) observer(1, state);
  shear_vertical(state, reg, spec.vertical_factor());
  if (observer) observer(2, state);
  shear_horizontal(state, reg, outer);
  if (observer) observer(3, state);
}

void scale_horizontal(ArrayState& state, AnalogReg reg, double alpha) {
  scale_lines(state, reg, alpha, kCols);
}

void scale_vertical(ArrayState& state, AnalogReg reg, double beta) {
  scale_lines(state, reg, beta, kRows);
}

void scale(ArrayState& state, AnalogReg reg, double sx, double sy,
           const StageObserver& observer) {
  const ScaleSpec spec = ScaleSpec::make(sx, sy);
  scale_horizontal(state, reg, spec.sx);
  if (observer) observer(1, state);
  scale_vertical(state, reg, spec.sy);
  if (observer) observer(2, state);
}

namespace testing {
void set_fault_injection(bool enabled) { g_fault_injection = enabled; }
bool fault_injection() { return g_fault_injection; }
}  // namespace testing

}  // namespace ppa
