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

#include "ppa/oracle.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "ppa/errors.hpp"

namespace ppa::oracle {
namespace {

// Source offsets (outward from the center) that end up at output offsets
// 0, 1, 2, ... of one half. Entries past `half` are truncated.
std::vector<int> surviving_sources(int half, double factor) {
  std::vector<int> sources;
  if (factor == 1.0) {
    for (int s = 0; s < half; ++s) sources.push_back(s);
    return sources;
  }
  const bool shrink = factor < 1.0;
  const int count =
      shrink ? half - static_cast<int>(std::ceil(factor * half))
             : static_cast<int>(std::ceil((factor - 1.0) * half));
  std::set<int> marked;
  for (int m = 1; m <= count; ++m) {
    // m-th of `count` evenly spaced positions, ceil(m * half / count) - 1.
    const long numerator = static_cast<long>(m) * half;
    marked.insert(static_cast<int>((numerator + count - 1) / count) - 1);
  }
  for (int s = 0; s < half && static_cast<int>(sources.size()) < half; ++s) {
    const bool hit = marked.count(s) != 0;
    if (shrink && hit) continue;
    sources.push_back(s);
    if (!shrink && hit) sources.push_back(s);
  }
  if (static_cast<int>(sources.size()) > half) sources.resize(half);
  return sources;
}

}  // namespace

Image ref_shear(const Image& img, Axis axis, double alpha) {
  const int h = img.height();
  const int w = img.width();
  Image out(h, w, img.background());
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      int si = i;
      int sj = j;
      if (axis == Axis::Horizontal) {
        sj = j - static_cast<int>(std::ceil(alpha * (h / 2 - i)));
      } else {
        si = i - static_cast<int>(std::ceil(alpha * (w / 2 - j)));
      }
      const bool inside = si >= 0 && si < h && sj >= 0 && sj < w;
      out.set(i, j, inside ? img.at(si, sj) : img.background());
    }
  }
  return out;
}

Image ref_scale(const Image& img, Axis axis, double factor) {
  if (!(factor > 0.0 && factor <= 2.0)) {
    throw ParameterError("scale factor " + std::to_string(factor) +
                         " outside (0, 2]");
  }
  const Image src = axis == Axis::Horizontal ? img : img.transposed();
  const int h = src.height();
  const int w = src.width();
  const int half = w / 2;
  const std::vector<int> sources = surviving_sources(half, factor);

  Image out(h, w, src.background());
  for (int i = 0; i < h; ++i) {
    for (int k = 0; k < half; ++k) {
      const bool have = k < static_cast<int>(sources.size());
      const int right = have ? src.at(i, half + sources[k]) : src.background();
      const int left =
          have ? src.at(i, half - 1 - sources[k]) : src.background();
      out.set(i, half + k, right);
      out.set(i, half - 1 - k, left);
    }
  }
  return axis == Axis::Horizontal ? out : out.transposed();
}

Image ref_rotate_three_shear(const Image& img, double theta) {
  const double outer = -std::tan(theta / 2);
  Image stage = ref_shear(img, Axis::Horizontal, outer);
  stage = ref_shear(stage, Axis::Vertical, std::sin(theta));
  return ref_shear(stage, Axis::Horizontal, outer);
}

Image ref_scale_xy(const Image& img, double sx, double sy) {
  return ref_scale(ref_scale(img, Axis::Horizontal, sx), Axis::Vertical, sy);
}

Image ref_rotate_nn(const Image& img, double theta) {
  if (std::abs(theta) > std::numbers::pi / 2 + 1e-12) {
    throw ParameterError("rotation angle exceeds pi/2 in magnitude");
  }
  const int h = img.height();
  const int w = img.width();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Image out(h, w, img.background());
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      // Lattice coordinates with y pointing up, origin at PE (H/2, W/2).
      const double x = j - w / 2;
      const double y = h / 2 - i;
      // Inverse of [[c, -s], [s, c]], the map the three shears realise.
      const double sx = c * x + s * y;
      const double sy = -s * x + c * y;
      // Nearest lattice point, ties toward the lower index.
      const int sj = static_cast<int>(std::ceil(sx + w / 2 - 0.5));
      const int si = static_cast<int>(std::ceil(h / 2 - sy - 0.5));
      const bool inside = si >= 0 && si < h && sj >= 0 && sj < w;
      out.set(i, j, inside ? img.at(si, sj) : img.background());
    }
  }
  return out;
}

ImageDiff diff_images(const Image& a, const Image& b) {
  if (a.height() != b.height() || a.width() != b.width()) {
    throw GeometryError("cannot diff images of different geometry");
  }
  ImageDiff diff;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] != pb[i]) ++diff.mismatch_count;
  }
  diff.mismatch_fraction =
      pa.empty() ? 0.0
                 : static_cast<double>(diff.mismatch_count) /
                       static_cast<double>(pa.size());
  return diff;
}

}  // namespace ppa::oracle
