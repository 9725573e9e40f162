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

#include <functional>
#include <map>
#include <string_view>
#include <vector>

#include "ppa/array_core.hpp"

// Shear, three-shear rotation and nearest-neighbour scaling expressed as
// sequences of ArrayState microinstructions. Every kernel owns FLAG: its
// previous content is discarded.
//
// Pixel semantics (row 0 at the top, column 0 at the left):
//  - shear_horizontal(alpha): row i is translated EAST by
//    r_i = ceil(alpha * (H/2 - i)) PEs (negative means WEST).
//  - shear_vertical(alpha): column j is translated SOUTH by
//    ceil(alpha * (W/2 - j)) PEs.
//  - scale_horizontal(alpha < 1): in each half, columns at outward offsets
//    spaced_offsets(E, W/2) from the innermost column are removed and the
//    survivors pack toward the center. alpha > 1 duplicates columns at
//    spaced_offsets(D, W/2) and pushes content outward.
// Vacated cells receive the array background.

namespace ppa {

enum class Axis { Horizontal, Vertical };

std::string_view to_string(Axis axis);
Axis parse_axis(std::string_view name);

struct ShearSpec {
  Axis axis = Axis::Horizontal;
  double alpha = 0.0;

  // |alpha| > 1 is accepted but pushes most content out of the array.
  bool lossy() const;
};

struct RotationSpec {
  double theta = 0.0;  // radians

  // Throws ParameterError when |theta| > pi/2.
  static RotationSpec make(double theta);
  double shear_factor() const;     // -tan(theta / 2)
  double vertical_factor() const;  // sin(theta)
};

struct ScaleSpec {
  double sx = 1.0;
  double sy = 1.0;

  // Throws ParameterError unless both factors lie in (0, 2].
  static ScaleSpec make(double sx, double sy);
};

// Per-line shift amounts for a shear about the array center.
struct ShiftProfile {
  std::vector<int> shifts;            // r_i for i = 0..extent-1
  std::map<int, std::vector<int>> sets;  // S_n for every nonzero n
  int max_magnitude = 0;              // N = ceil(|alpha| * extent / 2)
};

ShiftProfile row_shifts(double alpha, int extent);

struct EliminationParams {
  int removed = 0;   // E
  int spacing = 0;   // K, 0 when E == 0
  bool identity() const { return removed == 0; }
};

// E = half - ceil(alpha * half), K = ceil(half / E). Requires 0 < alpha <= 1.
EliminationParams elimination_params(double alpha, int half);

// Number of duplicated lines per half for up-scaling, ceil((alpha-1) * half).
int duplication_count(double alpha, int half);

// Outward offsets of `count` evenly spaced lines within a half of size
// `half`: ceil(m * half / count) - 1 for m = 1..count. Equals K-1, 2K-1, ...
// whenever count divides half.
std::vector<int> spaced_offsets(int count, int half);

void shear_horizontal(ArrayState& state, AnalogReg reg, double alpha);
void shear_vertical(ArrayState& state, AnalogReg reg, double alpha);
void shear(ArrayState& state, AnalogReg reg, const ShearSpec& spec);

// Called after each stage of a multi-pass kernel with a 1-based index.
using StageObserver = std::function<void(int stage, const ArrayState&)>;

// shear_horizontal(-tan(theta/2)), shear_vertical(sin theta), then
// shear_horizontal(-tan(theta/2)).
void rotate(ArrayState& state, AnalogReg reg, double theta,
            const StageObserver& observer = {});

void scale_horizontal(ArrayState& state, AnalogReg reg, double alpha);
void scale_vertical(ArrayState& state, AnalogReg reg, double beta);
// Horizontal, then vertical.
void scale(ArrayState& state, AnalogReg reg, double sx, double sy,
           const StageObserver& observer = {});

namespace testing {
// Off-by-one fault used to check that verification catches kernel bugs.
void set_fault_injection(bool enabled);
bool fault_injection();
}  // namespace testing

}  // namespace ppa
