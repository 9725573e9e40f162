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

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "ppa/errors.hpp"

namespace ppa {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(const std::string& bytes) : bytes_(bytes) {}

  // Next unsigned decimal token, skipping whitespace and '#' comments.
  long next_number(const char* field) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) {
      throw PgmError(std::string("malformed header: missing ") + field);
    }
    if (!std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      throw PgmError(std::string("malformed header: bad ") + field);
    }
    long value = 0;
    while (pos_ < bytes_.size() &&
           std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1L << 30) {
        throw PgmError(std::string("malformed header: ") + field +
                       " too large");
      }
      ++pos_;
    }
    if (pos_ < bytes_.size() &&
        !std::isspace(static_cast<unsigned char>(bytes_[pos_])) &&
        bytes_[pos_] != '#') {
      throw PgmError(std::string("malformed header: bad ") + field);
    }
    return value;
  }

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t pos) { pos_ = pos; }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

 private:
  const std::string& bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

Image parse_pgm(const std::string& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw PgmError("malformed header: not a PNM file");
  }
  const std::string magic = bytes.substr(0, 2);
  if (magic != "P2" && magic != "P5") {
    throw PgmError("unsupported magic '" + magic + "'");
  }
  const bool binary = magic == "P5";

  HeaderReader header(bytes);
  const long width = header.next_number("width");
  const long height = header.next_number("height");
  const long maxval = header.next_number("maxval");
  if (width <= 0 || height <= 0) {
    throw PgmError("malformed header: zero image dimension");
  }
  if (maxval == 0) throw PgmError("malformed header: maxval must be positive");
  if (maxval > 255) {
    throw PgmError("maxval " + std::to_string(maxval) +
                   " exceeds 255 (16-bit graymaps are unsupported)");
  }

  Image img(static_cast<int>(height), static_cast<int>(width));
  auto pixels = img.pixels();
  const std::size_t expected = pixels.size();

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t pos = header.pos();
    if (pos >= bytes.size() ||
        !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
      throw PgmError("truncated data: expected " + std::to_string(expected) +
                     " samples, got 0");
    }
    ++pos;
    const std::size_t available = bytes.size() - pos;
    if (available < expected) {
      throw PgmError("truncated data: expected " + std::to_string(expected) +
                     " samples, got " + std::to_string(available));
    }
    for (std::size_t i = 0; i < expected; ++i) {
      const auto sample = static_cast<unsigned char>(bytes[pos + i]);
      if (sample > maxval) {
        throw PgmError("sample " + std::to_string(sample) +
                       " exceeds maxval " + std::to_string(maxval));
      }
      pixels[i] = sample;
    }
    return img;
  }

  for (std::size_t i = 0; i < expected; ++i) {
    header.skip_space_and_comments();
    if (header.pos() >= bytes.size()) {
      throw PgmError("truncated data: expected " + std::to_string(expected) +
                     " samples, got " + std::to_string(i));
    }
    const long sample = header.next_number("sample");
    if (sample > maxval) {
      throw PgmError("sample " + std::to_string(sample) + " exceeds maxval " +
                     std::to_string(maxval));
    }
    pixels[i] = static_cast<std::uint8_t>(sample);
  }
  return img;
}

Image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PgmError("cannot open '" + path + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  return parse_pgm(bytes);
}

std::string format_pgm(const Image& img, bool binary) {
  std::ostringstream out;
  out << (binary ? "P5" : "P2") << '\n'
      << img.width() << ' ' << img.height() << '\n'
      << "255\n";
  const auto pixels = img.pixels();
  if (binary) {
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
    return out.str();
  }
  // Plain PGM lines should stay under 70 characters.
  constexpr int kPerLine = 16;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      const bool line_start = c % kPerLine == 0;
      if (!line_start) out << ' ';
      out << static_cast<int>(img.at(r, c));
      if (c % kPerLine == kPerLine - 1 || c == img.width() - 1) out << '\n';
    }
  }
  return out.str();
}

void write_pgm(const Image& img, const std::string& path, bool binary) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw PgmError("cannot open '" + path + "' for writing");
  const std::string bytes = format_pgm(img, binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw PgmError("write to '" + path + "' failed");
}

}  // namespace ppa
