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

#include "ppa/profiler.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>

#include "ppa/errors.hpp"
#include "ppa/transform_kernels.hpp"

namespace ppa {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

CostModel::CostModel() { costs_.fill(1.0); }

void CostModel::set_cost(OpClass op, double cost) {
  if (!std::isfinite(cost) || cost < 0.0) {
    throw CostModelError("cost for " + std::string(to_string(op)) +
                         " must be a non-negative number");
  }
  costs_[static_cast<std::size_t>(op)] = cost;
}

CostModel CostModel::parse(std::istream& in) {
  CostModel model;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw CostModelError("line " + std::to_string(line_no) +
                           ": expected 'key = value'");
    }
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    const auto op = parse_op_class(key);
    if (!op) {
      throw CostModelError("line " + std::to_string(line_no) +
                           ": unknown op class '" + std::string(key) + "'");
    }
    double cost = 0.0;
    const auto [end, ec] =
        std::from_chars(value.data(), value.data() + value.size(), cost);
    if (ec != std::errc{} || end != value.data() + value.size()) {
      throw CostModelError("line " + std::to_string(line_no) +
                           ": malformed value '" + std::string(value) + "'");
    }
    model.set_cost(*op, cost);
  }
  return model;
}

CostModel CostModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CostModelError("cannot open cost model '" + path + "'");
  return parse(in);
}

CostReport report(const InstructionTrace& trace, const CostModel& model,
                  std::string label, ArrayGeometry geometry,
                  std::vector<std::pair<std::string, double>> params) {
  CostReport out;
  out.label = std::move(label);
  out.geometry = geometry;
  out.params = std::move(params);
  out.counts = trace;
  for (OpClass op : kAllOpClasses) {
    const auto i = static_cast<std::size_t>(op);
    out.class_cost[i] = static_cast<double>(trace.count(op)) * model.cost(op);
    out.total_cost += out.class_cost[i];
  }
  return out;
}

std::string_view to_string(SweepKernel kernel) {
  switch (kernel) {
    case SweepKernel::Shear: return "shear";
    case SweepKernel::Rotate: return "rotate";
    case SweepKernel::Scale: return "scale";
  }
  return "?";
}

SweepKernel parse_sweep_kernel(std::string_view name) {
  if (name == "shear") return SweepKernel::Shear;
  if (name == "rotate") return SweepKernel::Rotate;
  if (name == "scale") return SweepKernel::Scale;
  throw ParameterError("unknown sweep kernel '" + std::string(name) + "'");
}

std::vector<CostReport> sweep(SweepKernel kernel, std::span<const double> grid,
                              ArrayGeometry geometry, const CostModel& model) {
  // Validate up front so no worker thread throws.
  for (double value : grid) {
    if (kernel == SweepKernel::Rotate) {
      RotationSpec::make(value * std::numbers::pi / 180.0);
    } else if (kernel == SweepKernel::Scale) {
      ScaleSpec::make(value, value);
    } else if (!std::isfinite(value)) {
      throw ParameterError("shear factor must be finite");
    }
  }

  std::vector<CostReport> reports(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double value = grid[static_cast<std::size_t>(i)];
    ArrayState state(geometry);
    std::vector<std::pair<std::string, double>> params;
    switch (kernel) {
      case SweepKernel::Shear:
        shear_horizontal(state, AnalogReg::A, value);
        params = {{"alpha", value}};
        break;
      case SweepKernel::Rotate:
        rotate(state, AnalogReg::A, value * std::numbers::pi / 180.0);
        params = {{"theta_deg", value}};
        break;
      case SweepKernel::Scale:
        scale(state, AnalogReg::A, value, value);
        params = {{"sx", value}, {"sy", value}};
        break;
    }
    reports[static_cast<std::size_t>(i)] =
        report(state.trace(), model, std::string(to_string(kernel)), geometry,
               std::move(params));
  }
  return reports;
}

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ec == std::errc{} ? end : buf);
}

void write_trace(std::ostream& out, const CostReport& report) {
  out << "# ppa-trace v1\n";
  out << "kernel = " << report.label << '\n';
  out << "height = " << report.geometry.height << '\n';
  out << "width = " << report.geometry.width << '\n';
  for (const auto& [key, value] : report.params) {
    out << "param." << key << " = " << format_number(value) << '\n';
  }
  for (OpClass op : kAllOpClasses) {
    out << "count." << to_string(op) << " = " << report.counts.count(op)
        << '\n';
  }
  for (OpClass op : kAllOpClasses) {
    out << "cost." << to_string(op) << " = "
        << format_number(report.class_cost[static_cast<std::size_t>(op)])
        << '\n';
  }
  out << "total_cost = " << format_number(report.total_cost) << '\n';
}

}  // namespace ppa
