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
#include <iosfwd>
#include <string>
#include <vector>

#include "ppa/array_core.hpp"
#include "ppa/transform_kernels.hpp"

namespace ppa {

enum class KernelKind { Shear, Rotate, Scale };

// One command-line run of a single kernel.
struct RunConfig {
  KernelKind kernel = KernelKind::Rotate;
  Axis axis = Axis::Horizontal;
  double alpha = 0.0;      // shear factor
  double theta_deg = 0.0;  // rotation angle in degrees
  double sx = 1.0;
  double sy = 1.0;

  // Used when no input file is given; otherwise taken from the file.
  ArrayGeometry geometry{};
  std::string input_path;
  std::string pattern = "disk";

  std::string output_path;
  bool binary_output = true;
  std::string trace_path;
  std::string cost_model_path;
  // Writes <prefix>_stage<N>.pgm after each pass when non-empty.
  std::string dump_stages_prefix;
  int background = 0;
  bool verify = false;

  // Throws ParameterError naming the offending field.
  void validate() const;
};

// Exit status: 0 on success, 1 when verification finds mismatches, 2 when a
// stage fails. Errors are reported on `err` as "error in <stage>: <message>".
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct VerifySuiteConfig {
  std::vector<int> sizes = {16, 64};
  int images_per_point = 2;
  std::uint64_t seed = 1;
};

// Oracle-equivalence grid over shear, rotation and scaling. Prints one line
// per group and returns 0 iff every case matches its oracle exactly.
int run_verify_suite(const VerifySuiteConfig& config, std::ostream& out);

struct SweepConfig {
  std::string kernel = "rotate";
  std::vector<double> values;
  ArrayGeometry geometry{};
  std::string cost_model_path;
  std::string trace_path;
};

// Prints a table of analog_shift and total cost per grid value; optionally
// writes all trace records, separated by blank lines, to trace_path.
int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ppa
