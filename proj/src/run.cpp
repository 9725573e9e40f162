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

#include "ppa/run.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "ppa/errors.hpp"
#include "ppa/oracle.hpp"
#include "ppa/patterns.hpp"
#include "ppa/pgm.hpp"
#include "ppa/profiler.hpp"

namespace ppa {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Thrown by run() internals to attach the failing stage to an error.
struct StageFailure {
  std::string stage;
  std::string message;
};

template <typename Fn>
auto in_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw StageFailure{stage, e.what()};
  }
}

std::string_view kernel_label(KernelKind kind) {
  switch (kind) {
    case KernelKind::Shear: return "shear";
    case KernelKind::Rotate: return "rotate";
    case KernelKind::Scale: return "scale";
  }
  return "?";
}

std::vector<std::pair<std::string, double>> kernel_params(
    const RunConfig& config) {
  switch (config.kernel) {
    case KernelKind::Shear:
      return {{config.axis == Axis::Horizontal ? "alpha_h" : "alpha_v",
               config.alpha}};
    case KernelKind::Rotate:
      return {{"theta_deg", config.theta_deg}};
    case KernelKind::Scale:
      return {{"sx", config.sx}, {"sy", config.sy}};
  }
  return {};
}

Image expected_output(const RunConfig& config, const Image& input) {
  switch (config.kernel) {
    case KernelKind::Shear:
      return oracle::ref_shear(input, config.axis, config.alpha);
    case KernelKind::Rotate:
      return oracle::ref_rotate_three_shear(input,
                                            config.theta_deg * kDegToRad);
    case KernelKind::Scale:
      return oracle::ref_scale_xy(input, config.sx, config.sy);
  }
  return input;
}

std::string stage_path(const std::string& prefix, int stage) {
  return prefix + "_stage" + std::to_string(stage) + ".pgm";
}

}  // namespace

void RunConfig::validate() const {
  if (background < 0 || background > 255) {
    throw ParameterError("background must lie in [0, 255]");
  }
  switch (kernel) {
    case KernelKind::Shear:
      if (!std::isfinite(alpha)) throw ParameterError("alpha must be finite");
      break;
    case KernelKind::Rotate:
      RotationSpec::make(theta_deg * kDegToRad);
      break;
    case KernelKind::Scale:
      ScaleSpec::make(sx, sy);
      break;
  }
  if (input_path.empty()) parse_pattern_kind(pattern);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    in_stage("config", [&] { config.validate(); });
    const auto background = static_cast<std::uint8_t>(config.background);

    Image input = in_stage("input", [&] {
      Image img = config.input_path.empty()
                      ? make_pattern(parse_pattern_kind(config.pattern),
                                     config.geometry.height,
                                     config.geometry.width)
                      : read_pgm(config.input_path);
      img.set_background(background);
      return img;
    });

    const CostModel model = in_stage("cost-model", [&] {
      return config.cost_model_path.empty()
                 ? CostModel{}
                 : CostModel::load(config.cost_model_path);
    });

    ArrayState state = in_stage("input", [&] {
      ArrayState s(ArrayGeometry::make(input.height(), input.width()),
                   background);
      s.load_image(AnalogReg::A, input);
      return s;
    });

    in_stage("kernel", [&] {
      StageObserver observer;
      if (!config.dump_stages_prefix.empty()) {
        observer = [&](int stage, const ArrayState& s) {
          write_pgm(s.peek_plane(AnalogReg::A),
                    stage_path(config.dump_stages_prefix, stage),
                    config.binary_output);
        };
      }
      switch (config.kernel) {
        case KernelKind::Shear:
          if (ShearSpec{config.axis, config.alpha}.lossy()) {
            err << "warning: |alpha| > 1 moves most content out of the array\n";
          }
          shear(state, AnalogReg::A, ShearSpec{config.axis, config.alpha});
          if (observer) observer(1, state);
          break;
        case KernelKind::Rotate:
          rotate(state, AnalogReg::A, config.theta_deg * kDegToRad, observer);
          break;
        case KernelKind::Scale:
          scale(state, AnalogReg::A, config.sx, config.sy, observer);
          break;
      }
    });

    const Image result = state.read_plane(AnalogReg::A);

    if (!config.output_path.empty()) {
      in_stage("output", [&] {
        write_pgm(result, config.output_path, config.binary_output);
      });
    }

    const CostReport cost =
        report(state.trace(), model, std::string(kernel_label(config.kernel)),
               state.geometry(), kernel_params(config));
    if (!config.trace_path.empty()) {
      in_stage("trace", [&] {
        std::ofstream trace(config.trace_path, std::ios::trunc);
        if (!trace) {
          throw Error("cannot open '" + config.trace_path + "' for writing");
        }
        write_trace(trace, cost);
        if (!trace) throw Error("write to '" + config.trace_path + "' failed");
      });
    }
    out << kernel_label(config.kernel) << ": analog_shift="
        << cost.counts.count(OpClass::AnalogShift)
        << " total_cost=" << format_number(cost.total_cost) << '\n';

    if (config.verify) {
      const oracle::ImageDiff diff = in_stage("verify", [&] {
        return oracle::diff_images(result, expected_output(config, input));
      });
      out << "verify: mismatch_count=" << diff.mismatch_count << '\n';
      if (diff.mismatch_count != 0) return 1;
    }
    return 0;
  } catch (const StageFailure& failure) {
    err << "error in " << failure.stage << ": " << failure.message << '\n';
    return 2;
  }
}

int run_verify_suite(const VerifySuiteConfig& config, std::ostream& out) {
  std::mt19937_64 seeds(config.seed);
  std::size_t failures = 0;

  auto check = [&](int size, auto&& kernel,
                   auto&& expected) {
    std::size_t cases = 0;
    std::size_t bad = 0;
    for (int n = 0; n < config.images_per_point; ++n) {
      const Image img = make_random_image(size, size, seeds());
      ArrayState state(ArrayGeometry::make(size, size));
      state.load_image(AnalogReg::A, img);
      kernel(state);
      ++cases;
      if (oracle::diff_images(state.read_plane(AnalogReg::A), expected(img))
              .mismatch_count != 0) {
        ++bad;
      }
    }
    return std::pair{cases, bad};
  };

  for (int size : config.sizes) {
    std::size_t cases = 0;
    std::size_t bad = 0;
    auto tally = [&](std::pair<std::size_t, std::size_t> r) {
      cases += r.first;
      bad += r.second;
    };

    for (int k = -16; k <= 16; ++k) {
      const double alpha = k / 16.0;
      for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
        tally(check(size,
            [&](ArrayState& s) { shear(s, AnalogReg::A, {axis, alpha}); },
            [&](const Image& img) {
              return oracle::ref_shear(img, axis, alpha);
            }));
      }
    }
    out << "shear    " << size << "x" << size << ": " << cases
        << " cases, " << bad << " mismatched\n";
    failures += bad;

    cases = bad = 0;
    for (double deg : {5.0, 15.0, 30.0, 45.0, -5.0, -15.0, -30.0, -45.0}) {
      const double theta = deg * kDegToRad;
      tally(check(size, [&](ArrayState& s) { rotate(s, AnalogReg::A, theta); },
          [&](const Image& img) {
            return oracle::ref_rotate_three_shear(img, theta);
          }));
    }
    out << "rotate   " << size << "x" << size << ": " << cases
        << " cases, " << bad << " mismatched\n";
    failures += bad;

    cases = bad = 0;
    const double factors[] = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0};
    for (double fx : factors) {
      for (double fy : factors) {
        tally(check(size,
            [&](ArrayState& s) { scale(s, AnalogReg::A, fx, fy); },
            [&](const Image& img) { return oracle::ref_scale_xy(img, fx, fy); }));
      }
    }
    out << "scale    " << size << "x" << size << ": " << cases
        << " cases, " << bad << " mismatched\n";
    failures += bad;
  }
  out << (failures == 0 ? "verify-suite: PASS" : "verify-suite: FAIL") << '\n';
  return failures == 0 ? 0 : 1;
}

int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const SweepKernel kernel = parse_sweep_kernel(config.kernel);
    const CostModel model = config.cost_model_path.empty()
                                ? CostModel{}
                                : CostModel::load(config.cost_model_path);
    const std::vector<CostReport> reports =
        sweep(kernel, config.values, config.geometry, model);

    out << std::left << std::setw(12) << "value" << std::setw(14)
        << "analog_shift" << std::setw(12) << "flag_shift" << "total_cost\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      out << std::setw(12) << format_number(config.values[i]) << std::setw(14)
          << reports[i].counts.count(OpClass::AnalogShift) << std::setw(12)
          << reports[i].counts.count(OpClass::FlagShift)
          << format_number(reports[i].total_cost) << '\n';
    }

    if (!config.trace_path.empty()) {
      std::ofstream trace(config.trace_path, std::ios::trunc);
      if (!trace) {
        throw Error("cannot open '" + config.trace_path + "' for writing");
      }
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i != 0) trace << '\n';
        write_trace(trace, reports[i]);
      }
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error in sweep: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ppa
