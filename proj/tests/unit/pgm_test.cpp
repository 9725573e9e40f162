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

#include "ppa/pgm.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ppa/errors.hpp"
#include "ppa/patterns.hpp"

namespace ppa {
namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ppa_pgm_" + name))
      .string();
}

std::string error_of(const std::string& bytes) {
  try {
    parse_pgm(bytes);
  } catch (const PgmError& e) {
    return e.what();
  }
  return "";
}

TEST(Pgm, ParsesPlainTwoByTwo) {
  const Image img = parse_pgm("P2\n# comment\n2 2\n255\n0 10\n20 255\n");
  ASSERT_EQ(img.height(), 2);
  ASSERT_EQ(img.width(), 2);
  EXPECT_EQ(img.at(0, 0), 0);
  EXPECT_EQ(img.at(0, 1), 10);
  EXPECT_EQ(img.at(1, 0), 20);
  EXPECT_EQ(img.at(1, 1), 255);
}

TEST(Pgm, RoundTripsBothEncodings) {
  const Image img = make_random_image(7, 13, 4);
  for (bool binary : {true, false}) {
    const std::string path = temp_path(binary ? "rt.pgm" : "rt_ascii.pgm");
    write_pgm(img, path, binary);
    EXPECT_EQ(read_pgm(path), img);
  }
}

TEST(Pgm, OutputIsDeterministic) {
  const Image img = make_pattern(PatternKind::Gradient, 9, 5);
  EXPECT_EQ(format_pgm(img, true), format_pgm(img, true));
  EXPECT_EQ(format_pgm(img, false), format_pgm(img, false));
  EXPECT_EQ(format_pgm(Image(1, 2), true), std::string("P5\n2 1\n255\n\0\0", 13));
}

TEST(Pgm, DistinctErrors) {
  EXPECT_NE(error_of("P6\n2 2\n255\n").find("unsupported magic 'P6'"),
            std::string::npos);
  EXPECT_NE(error_of("P2\n2 2\n65535\n0 0 0 0\n").find("exceeds 255"),
            std::string::npos);
  EXPECT_NE(error_of("P2\n2 x\n255\n").find("malformed header"),
            std::string::npos);
  EXPECT_NE(error_of("hello").find("malformed header"), std::string::npos);
  EXPECT_NE(error_of("P2\n2 2\n255\n1 2 3\n").find("truncated data"),
            std::string::npos);
  EXPECT_NE(error_of(std::string("P5\n2 2\n255\n\x01\x02", 13))
                .find("truncated data"),
            std::string::npos);
  EXPECT_NE(error_of("P2\n1 1\n15\n16\n").find("exceeds maxval"),
            std::string::npos);
  EXPECT_THROW(read_pgm("/nonexistent/in.pgm"), PgmError);
  EXPECT_THROW(write_pgm(Image(2, 2), "/nonexistent/dir/out.pgm"), PgmError);
}

TEST(Pgm, BinaryRasterMayStartWithWhitespaceByte) {
  // The single separator is consumed; a following 0x0A is pixel data.
  const Image img = parse_pgm(std::string("P5 2 1 255\n\x0a\x20", 13));
  EXPECT_EQ(img.at(0, 0), 10);
  EXPECT_EQ(img.at(0, 1), 32);
}

}  // namespace
}  // namespace ppa
