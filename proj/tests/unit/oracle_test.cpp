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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "ppa/errors.hpp"
#include "ppa/patterns.hpp"

namespace ppa::oracle {
namespace {

TEST(RefShear, ZeroIsIdentity) {
  const Image img = make_random_image(12, 10, 1);
  EXPECT_EQ(ref_shear(img, Axis::Horizontal, 0.0), img);
  EXPECT_EQ(ref_shear(img, Axis::Vertical, 0.0), img);
}

TEST(RefShear, SinglePixelMovesByItsRowShift) {
  for (int row : {0, 3, 8, 15}) {
    Image img(16, 16);
    img.set(row, 8, 200);
    const int r = static_cast<int>(std::ceil(0.375 * (8 - row)));
    const Image out = ref_shear(img, Axis::Horizontal, 0.375);
    EXPECT_EQ(out.at(row, 8 + r), 200) << row;
  }
}

TEST(RefShear, RowContentPreservedWhenInBounds) {
  const Image img = make_random_image(16, 64, 4);
  const double alpha = 0.5;
  const Image out = ref_shear(img, Axis::Horizontal, alpha);
  for (int i = 0; i < 16; ++i) {
    const int r = static_cast<int>(std::ceil(alpha * (8 - i)));
    // Compare the window of the row that stays inside the array.
    std::multiset<int> before;
    std::multiset<int> after;
    for (int j = std::max(0, -r); j < std::min(64, 64 - r); ++j) {
      before.insert(img.at(i, j));
      after.insert(out.at(i, j + r));
    }
    EXPECT_EQ(before, after) << i;
  }
}

TEST(RefScale, UnitIsIdentity) {
  const Image img = make_random_image(16, 16, 2);
  EXPECT_EQ(ref_scale(img, Axis::Horizontal, 1.0), img);
  EXPECT_EQ(ref_scale(img, Axis::Vertical, 1.0), img);
  EXPECT_THROW(ref_scale(img, Axis::Horizontal, 2.5), ParameterError);
}

TEST(RefScale, EliminatesPinnedColumnsAndKeepsOrder) {
  // 32 wide, alpha = 0.5: E = 8, K = 2, offsets 1,3,...,15 from each side of
  // the center are removed.
  const Image img = make_pattern(PatternKind::UniqueColumns, 4, 32);
  Image tagged = img;
  tagged.set_background(255);
  const Image out = ref_scale(tagged, Axis::Horizontal, 0.5);

  std::set<int> removed;
  for (int d = 1; d < 16; d += 2) {
    removed.insert(16 + d);
    removed.insert(15 - d);
  }
  std::vector<int> row;
  for (int c = 0; c < 32; ++c) {
    if (out.at(0, c) != 255) row.push_back(out.at(0, c));
  }
  EXPECT_EQ(row.size(), 16u);
  EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
  for (int v : row) EXPECT_EQ(removed.count(v), 0u) << v;
  // Survivors pack toward the center; outer cells become background.
  EXPECT_EQ(out.at(0, 16), 16);
  EXPECT_EQ(out.at(0, 17), 18);
  EXPECT_EQ(out.at(0, 15), 15);
  EXPECT_EQ(out.at(0, 14), 13);
  EXPECT_EQ(out.at(0, 31), 255);
  EXPECT_EQ(out.at(0, 0), 255);
}

TEST(RefRotateNn, ZeroIsIdentity) {
  const Image img = make_random_image(20, 16, 3);
  EXPECT_EQ(ref_rotate_nn(img, 0.0), img);
}

TEST(RefRotateNn, QuarterTurnPreservesFourFoldPattern) {
  // Square centered on the lattice origin PE (H/2, W/2).
  Image img(32, 32);
  for (int r = 16 - 5; r <= 16 + 5; ++r) {
    for (int c = 16 - 5; c <= 16 + 5; ++c) img.set(r, c, 180);
  }
  img.set(16, 16, 90);
  EXPECT_EQ(diff_images(ref_rotate_nn(img, std::numbers::pi / 2), img)
                .mismatch_count,
            0u);
  EXPECT_EQ(diff_images(ref_rotate_nn(img, -std::numbers::pi / 2), img)
                .mismatch_count,
            0u);
}

TEST(DiffImages, CountsMismatches) {
  const Image a = make_random_image(8, 8, 5);
  EXPECT_EQ(diff_images(a, a).mismatch_count, 0u);
  EXPECT_EQ(diff_images(a, a).mismatch_fraction, 0.0);

  Image complement = a;
  for (auto& p : complement.pixels()) p = static_cast<std::uint8_t>(255 - p);
  const ImageDiff d = diff_images(a, complement);
  EXPECT_EQ(d.mismatch_count, 64u);
  EXPECT_EQ(d.mismatch_fraction, 1.0);

  EXPECT_THROW(diff_images(a, Image(8, 6)), GeometryError);
}

}  // namespace
}  // namespace ppa::oracle
