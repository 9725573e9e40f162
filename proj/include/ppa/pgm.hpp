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

#include <string>

#include "ppa/image.hpp"

namespace ppa {

// Reads a portable graymap, plain (P2) or raw (P5), with maxval <= 255.
// Samples are taken as-is, without rescaling to 255. Throws PgmError with a
// distinct message for an unsupported magic, a malformed header, maxval > 255
// and truncated data.
Image read_pgm(const std::string& path);
Image parse_pgm(const std::string& bytes);

// Writes maxval 255, P5 when `binary` is set and P2 otherwise. Output bytes
// depend only on the image.
void write_pgm(const Image& img, const std::string& path, bool binary = true);
std::string format_pgm(const Image& img, bool binary = true);

}  // namespace ppa
