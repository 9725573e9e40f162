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

#include <cstddef>

#include "ppa/image.hpp"
#include "ppa/transform_kernels.hpp"

// Scalar reference implementations of the kernels' pixel semantics. They work
// cell by cell on plain Images and share no code with the array kernels.
namespace ppa::oracle {

// out(i, j) = img(i, j - ceil(alpha * (H/2 - i))) for the horizontal axis,
// out(i, j) = img(i - ceil(alpha * (W/2 - j)), j) for the vertical axis.
Image ref_shear(const Image& img, Axis axis, double alpha);

// Removes (factor < 1) or duplicates (factor > 1) the evenly spaced lines of
// each half, packing toward or pushing away from the center.
Image ref_scale(const Image& img, Axis axis, double factor);

// ref_shear(h, -tan(theta/2)), then (v, sin theta), then (h, -tan(theta/2)).
Image ref_rotate_three_shear(const Image& img, double theta);

// ref_scale horizontally by sx, then vertically by sy.
Image ref_scale_xy(const Image& img, double sx, double sy);

// Direct nearest-neighbour rotation about the array center, sampling
// img(R(-theta) (p - c) + c). Only used to measure how far the three-shear
// result deviates from an ideal rotation.
Image ref_rotate_nn(const Image& img, double theta);

struct ImageDiff {
  std::size_t mismatch_count = 0;
  double mismatch_fraction = 0.0;
};

// Throws GeometryError for different geometries.
ImageDiff diff_images(const Image& a, const Image& b);

}  // namespace ppa::oracle
