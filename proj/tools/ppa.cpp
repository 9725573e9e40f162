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

// Command-line front end: runs one transform kernel on the simulated array,
// the oracle verification grid, or an instruction-cost sweep.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppa/errors.hpp"
#include "ppa/run.hpp"
#include "ppa/transform_kernels.hpp"

namespace {

struct CommonFlags {
  std::string axis = "horizontal";
  int height = 256;
  int width = 256;
  bool ascii = false;
  bool inject_fault = false;
};

void add_common(CLI::App* cmd, ppa::RunConfig& config, CommonFlags& flags) {
  cmd->add_option("-i,--input", config.input_path, "Input PGM (P2 or P5)");
  cmd->add_option("-o,--output", config.output_path, "Output PGM path");
  cmd->add_option("--pattern", config.pattern,
                  "Test pattern when no input is given: checkerboard, disk, "
                  "gradient, unique-columns")
      ->capture_default_str();
  cmd->add_option("--height", flags.height, "Array height for patterns")
      ->capture_default_str();
  cmd->add_option("--width", flags.width, "Array width for patterns")
      ->capture_default_str();
  cmd->add_option("--background", config.background,
                  "Value entering at the array edges")
      ->capture_default_str();
  cmd->add_option("--trace", config.trace_path, "Write a cost trace record");
  cmd->add_option("--cost-model", config.cost_model_path,
                  "Per-op-class cost file (key = value)");
  cmd->add_option("--dump-stages", config.dump_stages_prefix,
                  "Write <prefix>_stage<N>.pgm after each pass");
  cmd->add_flag("--verify", config.verify,
                "Compare against the scalar oracle; nonzero exit on mismatch");
  cmd->add_flag("--ascii", flags.ascii, "Write plain P2 instead of raw P5");
  cmd->add_flag("--inject-fault", flags.inject_fault)->group("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pixel processor array transform simulator"};
  app.require_subcommand(1);

  ppa::RunConfig config;
  CommonFlags flags;

  auto* shear_cmd = app.add_subcommand("shear", "Shear along one axis");
  add_common(shear_cmd, config, flags);
  shear_cmd->add_option("--axis", flags.axis, "horizontal or vertical")
      ->capture_default_str();
  shear_cmd->add_option("--alpha", config.alpha, "Shear factor")->required();

  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate by three shears");
  add_common(rotate_cmd, config, flags);
  rotate_cmd->add_option("--theta", config.theta_deg, "Angle in degrees")
      ->required();

  auto* scale_cmd = app.add_subcommand("scale", "Nearest-neighbour scaling");
  add_common(scale_cmd, config, flags);
  scale_cmd->add_option("--sx", config.sx, "Horizontal factor in (0, 2]")
      ->capture_default_str();
  scale_cmd->add_option("--sy", config.sy, "Vertical factor in (0, 2]")
      ->capture_default_str();

  ppa::VerifySuiteConfig suite;
  auto* suite_cmd = app.add_subcommand(
      "verify-suite", "Check every kernel against its oracle on random images");
  suite_cmd->add_option("--sizes", suite.sizes, "Square array sizes")
      ->capture_default_str();
  suite_cmd->add_option("--images", suite.images_per_point,
                        "Random images per grid point")
      ->capture_default_str();
  suite_cmd->add_option("--seed", suite.seed)->capture_default_str();

  ppa::SweepConfig sweep;
  int sweep_height = 256;
  int sweep_width = 256;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Instruction counts over a parameter grid");
  sweep_cmd->add_option("--kernel", sweep.kernel, "shear, rotate or scale")
      ->capture_default_str();
  sweep_cmd->add_option("--values", sweep.values,
                        "Grid: alpha (shear), degrees (rotate), factor (scale)")
      ->required();
  sweep_cmd->add_option("--height", sweep_height)->capture_default_str();
  sweep_cmd->add_option("--width", sweep_width)->capture_default_str();
  sweep_cmd->add_option("--cost-model", sweep.cost_model_path);
  sweep_cmd->add_option("--trace", sweep.trace_path,
                        "Write one trace record per grid value");

  CLI11_PARSE(app, argc, argv);

  try {
    if (suite_cmd->parsed()) return ppa::run_verify_suite(suite, std::cout);

    if (sweep_cmd->parsed()) {
      sweep.geometry = ppa::ArrayGeometry::make(sweep_height, sweep_width);
      return ppa::run_sweep(sweep, std::cout, std::cerr);
    }

    if (shear_cmd->parsed()) {
      config.kernel = ppa::KernelKind::Shear;
      config.axis = ppa::parse_axis(flags.axis);
    } else if (rotate_cmd->parsed()) {
      config.kernel = ppa::KernelKind::Rotate;
    } else {
      config.kernel = ppa::KernelKind::Scale;
    }
    if (config.input_path.empty()) {
      config.geometry = ppa::ArrayGeometry::make(flags.height, flags.width);
    }
  } catch (const ppa::Error& e) {
    std::cerr << "error in config: " << e.what() << '\n';
    return 2;
  }
  config.binary_output = !flags.ascii;
  ppa::testing::set_fault_injection(flags.inject_fault);
  return ppa::run(config, std::cout, std::cerr);
}
