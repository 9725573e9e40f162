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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppa/array_core.hpp"

namespace ppa {

// Cost per instruction class in arbitrary units. Defaults to 1.0 each.
class CostModel {
 public:
  CostModel();

  double cost(OpClass op) const { return costs_[static_cast<std::size_t>(op)]; }
  // Throws CostModelError for negative or non-finite costs.
  void set_cost(OpClass op, double cost);

  // Flat "key = value" text; '#' starts a comment. Unknown keys, malformed
  // lines and negative values raise CostModelError.
  static CostModel parse(std::istream& in);
  static CostModel load(const std::string& path);

 private:
  std::array<double, kOpClassCount> costs_{};
};

struct CostReport {
  std::string label;
  ArrayGeometry geometry;
  std::vector<std::pair<std::string, double>> params;
  InstructionTrace counts;
  std::array<double, kOpClassCount> class_cost{};
  double total_cost = 0.0;
};

CostReport report(const InstructionTrace& trace, const CostModel& model,
                  std::string label, ArrayGeometry geometry,
                  std::vector<std::pair<std::string, double>> params = {});

enum class SweepKernel { Shear, Rotate, Scale };

std::string_view to_string(SweepKernel kernel);
// Throws ParameterError for anything but "shear", "rotate" or "scale".
SweepKernel parse_sweep_kernel(std::string_view name);

// Runs the kernel once per grid value on a fresh array and reports the
// instructions it issued. Grid values are alpha for shear (horizontal),
// degrees for rotate and a uniform factor for scale. Report order follows
// grid order.
std::vector<CostReport> sweep(SweepKernel kernel, std::span<const double> grid,
                              ArrayGeometry geometry,
                              const CostModel& model = CostModel{});

// Line-oriented trace record:
//
//   # ppa-trace v1
//   kernel = rotate
//   height = 256
//   width = 256
//   param.theta_deg = 45
//   count.<class> = <n>        (one per op class, fixed order)
//   cost.<class> = <units>
//   total_cost = <units>
//
// Numbers use the shortest round-trip decimal form.
void write_trace(std::ostream& out, const CostReport& report);

std::string format_number(double value);

}  // namespace ppa
