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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "ppa/errors.hpp"
#include "ppa/oracle.hpp"
#include "ppa/patterns.hpp"

namespace ppa {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

ArrayState loaded(const Image& img, std::uint8_t background = 0) {
  ArrayState state(ArrayGeometry::make(img.height(), img.width()), background);
  state.load_image(AnalogReg::A, img);
  state.reset_trace();
  return state;
}

// Number of halves holding at least one nonzero shift.
int active_halves(double alpha, int extent) {
  const ShiftProfile p = row_shifts(alpha, extent);
  bool lead = false;
  bool trail = false;
  for (int i = 0; i < extent; ++i) {
    if (p.shifts[i] == 0) continue;
    (i < extent / 2 ? lead : trail) = true;
  }
  return static_cast<int>(lead) + static_cast<int>(trail);
}

TEST(RowShifts, ZeroShear) {
  const ShiftProfile p = row_shifts(0.0, 16);
  for (int r : p.shifts) EXPECT_EQ(r, 0);
  EXPECT_EQ(p.max_magnitude, 0);
  EXPECT_TRUE(p.sets.empty());
}

TEST(RowShifts, HalfShearAt256) {
  const ShiftProfile p = row_shifts(0.5, 256);
  EXPECT_EQ(p.shifts[0], 64);
  EXPECT_EQ(p.shifts[128], 0);
  EXPECT_EQ(p.shifts[255], -63);
  EXPECT_EQ(p.max_magnitude, 64);
}

TEST(RowShifts, NegativeQuarterAt8) {
  // Frozen from evaluating ceil(-0.25 * (4 - i)) independently.
  const ShiftProfile p = row_shifts(-0.25, 8);
  EXPECT_EQ(p.shifts, (std::vector<int>{-1, 0, 0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(p.max_magnitude, 1);
  EXPECT_EQ(p.sets.at(-1), (std::vector<int>{0}));
  EXPECT_EQ(p.sets.at(1), (std::vector<int>{5, 6, 7}));
}

TEST(RowShifts, MonotoneAndPartitioned) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = dist(rng);
    const int extent = 4 + 2 * static_cast<int>(rng() % 60);
    const ShiftProfile p = row_shifts(alpha, extent);
    for (int i = 1; i < extent; ++i) {
      if (alpha > 0) EXPECT_LE(p.shifts[i], p.shifts[i - 1]);
      if (alpha < 0) EXPECT_GE(p.shifts[i], p.shifts[i - 1]);
    }
    std::size_t in_sets = 0;
    for (const auto& [n, rows] : p.sets) {
      for (int i : rows) EXPECT_EQ(p.shifts[i], n);
      in_sets += rows.size();
    }
    const auto nonzero = static_cast<std::size_t>(std::count_if(
        p.shifts.begin(), p.shifts.end(), [](int r) { return r != 0; }));
    EXPECT_EQ(in_sets, nonzero);
    EXPECT_EQ(p.max_magnitude,
              static_cast<int>(std::ceil(std::abs(alpha) * extent / 2)));
  }
}

TEST(EliminationParams, DirectEvaluation) {
  EXPECT_TRUE(elimination_params(1.0, 128).identity());
  EXPECT_EQ(elimination_params(1.0, 128).spacing, 0);
  EXPECT_EQ(elimination_params(0.5, 128).removed, 64);
  EXPECT_EQ(elimination_params(0.5, 128).spacing, 2);
  EXPECT_EQ(elimination_params(0.75, 128).removed, 32);
  EXPECT_EQ(elimination_params(0.75, 128).spacing, 4);
  EXPECT_EQ(elimination_params(0.25, 128).removed, 96);
  EXPECT_EQ(elimination_params(0.25, 128).spacing, 2);
  EXPECT_THROW(elimination_params(0.0, 128), ParameterError);
  EXPECT_THROW(elimination_params(1.5, 128), ParameterError);
}

TEST(SpacedOffsets, MatchesSpacingWhenCountDividesHalf) {
  EXPECT_EQ(spaced_offsets(32, 128).front(), 3);
  EXPECT_EQ(spaced_offsets(32, 128)[1], 7);
  EXPECT_EQ(spaced_offsets(32, 128).back(), 127);
  EXPECT_EQ(spaced_offsets(4, 8), (std::vector<int>{1, 3, 5, 7}));
  // 96 of 128 does not divide; frozen from ceil(m * 128 / 96) - 1.
  const auto uneven = spaced_offsets(96, 128);
  EXPECT_EQ(std::vector<int>(uneven.begin(), uneven.begin() + 8),
            (std::vector<int>{1, 2, 3, 5, 6, 7, 9, 10}));
  EXPECT_EQ(uneven.back(), 127);
}

TEST(SpacedOffsets, AlwaysDistinctInsideHalf) {
  for (int half = 2; half <= 64; ++half) {
    for (int count = 1; count <= half; ++count) {
      const auto offsets = spaced_offsets(count, half);
      const std::set<int> unique(offsets.begin(), offsets.end());
      ASSERT_EQ(unique.size(), static_cast<std::size_t>(count));
      ASSERT_GE(*unique.begin(), 0);
      ASSERT_EQ(*unique.rbegin(), half - 1);
    }
  }
}

TEST(Shear, ZeroIsIdentity) {
  const Image img = make_random_image(32, 32, 1);
  ArrayState state = loaded(img);
  shear_horizontal(state, AnalogReg::A, 0.0);
  shear_vertical(state, AnalogReg::A, 0.0);
  EXPECT_EQ(state.peek_plane(AnalogReg::A), img);
  EXPECT_EQ(state.trace().count(OpClass::AnalogShift), 0u);
}

TEST(Shear, HalfAt256MatchesOracleWith128Shifts) {
  const Image img = make_random_image(256, 256, 42);
  ArrayState state = loaded(img);
  shear_horizontal(state, AnalogReg::A, 0.5);
  EXPECT_EQ(state.peek_plane(AnalogReg::A),
            oracle::ref_shear(img, Axis::Horizontal, 0.5));
  EXPECT_EQ(state.trace().count(OpClass::AnalogShift), 128u);
}

TEST(Shear, PositiveAlphaMovesUpperRowsEast) {
  Image img(8, 8);
  img.set(0, 3, 255);
  ArrayState state = loaded(img);
  shear_horizontal(state, AnalogReg::A, 0.25);
  // r_0 = ceil(0.25 * 4) = 1
  EXPECT_EQ(state.peek_plane(AnalogReg::A).at(0, 4), 255);
}

TEST(Shear, BackgroundFillsVacatedCells) {
  const Image img = make_random_image(16, 16, 12);
  ArrayState state = loaded(img, 33);
  shear_horizontal(state, AnalogReg::A, 1.0);
  // Row 0 moves 8 east, so its first 8 cells are vacated.
  for (int c = 0; c < 8; ++c) EXPECT_EQ(state.peek_plane(AnalogReg::A).at(0, c), 33);
}

TEST(Shear, VerticalIsTransposeOfHorizontal) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = (static_cast<int>(rng() % 33) - 16) / 16.0;
    const Image img = make_random_image(24, 24, rng());
    ArrayState vertical = loaded(img);
    shear_vertical(vertical, AnalogReg::A, alpha);
    ArrayState horizontal = loaded(img.transposed());
    shear_horizontal(horizontal, AnalogReg::A, alpha);
    ASSERT_EQ(vertical.peek_plane(AnalogReg::A),
              horizontal.peek_plane(AnalogReg::A).transposed())
        << alpha;
  }
}

TEST(Shear, RandomAlphaMatchesOracleBothAxes) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int h = 4 + 2 * static_cast<int>(rng() % 20);
    const int w = 4 + 2 * static_cast<int>(rng() % 20);
    const double alpha = dist(rng);
    const Image img = make_random_image(h, w, rng());
    for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
      ArrayState state = loaded(img);
      shear(state, AnalogReg::A, {axis, alpha});
      ASSERT_EQ(state.peek_plane(AnalogReg::A),
                oracle::ref_shear(img, axis, alpha))
          << h << "x" << w << " alpha=" << alpha;
    }
  }
}

TEST(Shear, AnalogShiftCountFollowsLoopBounds) {
  for (int size : {4, 6, 16, 64}) {
    for (int k = -16; k <= 16; ++k) {
      const double alpha = k / 16.0;
      ArrayState state(ArrayGeometry::make(size, size));
      shear_horizontal(state, AnalogReg::A, alpha);
      const auto expected = static_cast<std::uint64_t>(
          std::ceil(std::abs(alpha) * size / 2) * active_halves(alpha, size));
      EXPECT_EQ(state.trace().count(OpClass::AnalogShift), expected)
          << size << " " << alpha;
    }
  }
}

TEST(Shear, LossyFlag) {
  EXPECT_FALSE((ShearSpec{Axis::Horizontal, 1.0}.lossy()));
  EXPECT_TRUE((ShearSpec{Axis::Horizontal, -1.5}.lossy()));
  // Still well defined past |alpha| = 1.
  const Image img = make_random_image(16, 16, 2);
  ArrayState state = loaded(img);
  shear_horizontal(state, AnalogReg::A, 1.75);
  EXPECT_EQ(state.peek_plane(AnalogReg::A),
            oracle::ref_shear(img, Axis::Horizontal, 1.75));
}

TEST(Rotate, ZeroIsIdentity) {
  const Image img = make_random_image(32, 32, 5);
  ArrayState state = loaded(img);
  rotate(state, AnalogReg::A, 0.0);
  EXPECT_EQ(state.peek_plane(AnalogReg::A), img);
  EXPECT_EQ(state.trace().count(OpClass::AnalogShift), 0u);
}

TEST(Rotate, RejectsAnglesBeyondQuarterTurn) {
  ArrayState state(ArrayGeometry::make(8, 8));
  EXPECT_THROW(rotate(state, AnalogReg::A, 1.6), ParameterError);
  EXPECT_THROW(rotate(state, AnalogReg::A, -1.6), ParameterError);
  EXPECT_NO_THROW(rotate(state, AnalogReg::A, std::numbers::pi / 2));
}

TEST(Rotate, FortyFiveAt256MatchesShearComposition) {
  const Image img = make_random_image(256, 256, 45);
  ArrayState state = loaded(img);
  int stages = 0;
  rotate(state, AnalogReg::A, 45 * kDeg,
         [&](int stage, const ArrayState&) { stages = stage; });
  EXPECT_EQ(stages, 3);
  EXPECT_EQ(state.peek_plane(AnalogReg::A),
            oracle::ref_rotate_three_shear(img, 45 * kDeg));
}

TEST(Rotate, ShiftCountIsSumOfShears) {
  for (double deg : {-40.0, -10.0, 5.0, 22.5, 45.0, 90.0}) {
    const double theta = deg * kDeg;
    ArrayState rotated(ArrayGeometry::make(64, 48));
    rotate(rotated, AnalogReg::A, theta);

    ArrayState parts(ArrayGeometry::make(64, 48));
    shear_horizontal(parts, AnalogReg::A, -std::tan(theta / 2));
    shear_vertical(parts, AnalogReg::A, std::sin(theta));
    shear_horizontal(parts, AnalogReg::A, -std::tan(theta / 2));
    EXPECT_EQ(rotated.trace(), parts.trace()) << deg;
  }
}

TEST(Rotate, ShearProductIsRotationByTheta) {
  // The three shears compose to [[cos, -sin], [sin, cos]] acting on
  // (x right, y up) coordinates.
  for (double deg = -90; deg <= 90; deg += 7.5) {
    const double t = deg * kDeg;
    const double a = -std::tan(t / 2);
    const double b = std::sin(t);
    const double m00 = 1 + a * b;
    const double m01 = a * (1 + a * b) + a;
    const double m10 = b;
    const double m11 = a * b + 1;
    EXPECT_NEAR(m00, std::cos(t), 1e-12);
    EXPECT_NEAR(m01, -std::sin(t), 1e-12);
    EXPECT_NEAR(m10, std::sin(t), 1e-12);
    EXPECT_NEAR(m11, std::cos(t), 1e-12);
  }
}

TEST(Scale, UnitIsIdentity) {
  const Image img = make_random_image(32, 32, 9);
  ArrayState state = loaded(img);
  scale(state, AnalogReg::A, 1.0, 1.0);
  EXPECT_EQ(state.peek_plane(AnalogReg::A), img);
  EXPECT_EQ(state.trace().count(OpClass::AnalogShift), 0u);
}

TEST(Scale, HalfAt256MatchesOracle) {
  const Image img = make_random_image(256, 256, 50);
  ArrayState state = loaded(img);
  scale_horizontal(state, AnalogReg::A, 0.5);
  EXPECT_EQ(state.peek_plane(AnalogReg::A),
            oracle::ref_scale(img, Axis::Horizontal, 0.5));
  // One shift per eliminated column, 64 per half.
  EXPECT_EQ(state.trace().count(OpClass::AnalogShift), 128u);
}

TEST(Scale, DoublingRepeatsEveryCentralColumn) {
  const int size = 32;
  const Image img = make_pattern(PatternKind::UniqueColumns, size, size);
  ArrayState state = loaded(img);
  scale_horizontal(state, AnalogReg::A, 2.0);
  const Image out = state.peek_plane(AnalogReg::A);
  EXPECT_EQ(out, oracle::ref_scale(img, Axis::Horizontal, 2.0));
  // Right half holds source columns 16,16,17,17,...,23,23.
  for (int k = 0; k < size / 2; ++k) {
    EXPECT_EQ(out.at(0, size / 2 + k), size / 2 + k / 2);
    EXPECT_EQ(out.at(0, size / 2 - 1 - k), size / 2 - 1 - k / 2);
  }
}

TEST(Scale, UpscaleByQuarterDuplicatesEveryFourth) {
  const Image img = make_pattern(PatternKind::UniqueColumns, 16, 16);
  ArrayState state = loaded(img);
  scale_horizontal(state, AnalogReg::A, 1.25);
  const Image out = state.peek_plane(AnalogReg::A);
  // D = ceil(0.25 * 8) = 2 at offsets 3 and 7; right half 8,9,10,11,11,...
  const int expected[] = {8, 9, 10, 11, 11, 12, 13, 14};
  for (int k = 0; k < 8; ++k) EXPECT_EQ(out.at(5, 8 + k), expected[k]) << k;
  EXPECT_EQ(out, oracle::ref_scale(img, Axis::Horizontal, 1.25));
}

TEST(Scale, VerticalIsTransposeOfHorizontal) {
  for (double beta : {0.3, 0.5, 0.9, 1.1, 1.6, 2.0}) {
    const Image img = make_random_image(20, 20, 77);
    ArrayState vertical = loaded(img);
    scale_vertical(vertical, AnalogReg::A, beta);
    ArrayState horizontal = loaded(img.transposed());
    scale_horizontal(horizontal, AnalogReg::A, beta);
    EXPECT_EQ(vertical.peek_plane(AnalogReg::A),
              horizontal.peek_plane(AnalogReg::A).transposed())
        << beta;
  }
}

TEST(Scale, RandomFactorsMatchOracle) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(0.05, 2.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int h = 4 + 2 * static_cast<int>(rng() % 24);
    const int w = 4 + 2 * static_cast<int>(rng() % 24);
    const double sx = dist(rng);
    const double sy = dist(rng);
    const Image img = make_random_image(h, w, rng());
    ArrayState state = loaded(img, static_cast<std::uint8_t>(rng() % 256));
    Image expected_input = img;
    expected_input.set_background(state.background());
    scale(state, AnalogReg::A, sx, sy);
    ASSERT_EQ(state.peek_plane(AnalogReg::A),
              oracle::ref_scale_xy(expected_input, sx, sy))
        << h << "x" << w << " sx=" << sx << " sy=" << sy;
  }
}

TEST(Scale, EliminatesExactColumnCount) {
  const int size = 64;
  const Image img = make_pattern(PatternKind::UniqueColumns, size, size);
  for (double alpha : {0.1, 0.25, 0.4, 0.5, 0.75, 0.99}) {
    // Background 255 never collides with a column tag below 64.
    ArrayState state = loaded(img, 255);
    scale_horizontal(state, AnalogReg::A, alpha);
    const Image out = state.peek_plane(AnalogReg::A);
    std::set<int> present;
    for (int c = 0; c < size; ++c) present.insert(out.at(0, c));
    const int half = size / 2;
    const int removed = half - static_cast<int>(std::ceil(alpha * half));
    int absent = 0;
    for (int c = 0; c < size; ++c) absent += present.count(c) == 0;
    EXPECT_EQ(absent, 2 * removed) << alpha;
  }
}

TEST(Scale, RejectsOutOfRangeFactors) {
  ArrayState state(ArrayGeometry::make(8, 8));
  EXPECT_THROW(scale(state, AnalogReg::A, 0.0, 1.0), ParameterError);
  EXPECT_THROW(scale(state, AnalogReg::A, 1.0, 2.5), ParameterError);
  EXPECT_THROW(scale_horizontal(state, AnalogReg::A, -1.0), ParameterError);
  EXPECT_THROW(ScaleSpec::make(3.0, 1.0), ParameterError);
}

TEST(FaultInjection, BreaksOracleEquivalence) {
  const Image img = make_random_image(16, 16, 8);
  testing::set_fault_injection(true);
  ArrayState sheared = loaded(img);
  shear_horizontal(sheared, AnalogReg::A, 0.5);
  ArrayState scaled = loaded(img);
  scale_horizontal(scaled, AnalogReg::A, 0.5);
  testing::set_fault_injection(false);
  EXPECT_NE(sheared.peek_plane(AnalogReg::A),
            oracle::ref_shear(img, Axis::Horizontal, 0.5));
  EXPECT_NE(scaled.peek_plane(AnalogReg::A),
            oracle::ref_scale(img, Axis::Horizontal, 0.5));
}

}  // namespace
}  // namespace ppa
