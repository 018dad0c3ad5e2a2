/**
 * Copyright 2026 The SRA Lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cctype>
#include <string>

#include "sra/error.h"
#include "sra/image.h"

namespace sra {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads a decimal integer.
  long ReadInt() {
    SkipSpaceAndComments();
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_++] - '0');
      if (value > 1'000'000'000L) throw MalformedInput("PPM header value too large");
      ++digits;
    }
    if (digits == 0) throw MalformedInput("PPM header: expected a number");
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void ConsumeSingleSpace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw MalformedInput("PPM header: missing whitespace before raster");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const uint8_t> bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

Image LoadPpm(std::span<const uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    throw MalformedInput("not a binary PPM (expected P6 magic)");
  }
  HeaderReader reader(bytes);
  const long width = reader.ReadInt();
  const long height = reader.ReadInt();
  const long maxval = reader.ReadInt();
  if (width < 1 || height < 1) throw MalformedInput("PPM dimensions must be positive");
  if (maxval != 255) throw MalformedInput("PPM maxval must be 255, got " + std::to_string(maxval));
  reader.ConsumeSingleSpace();

  const std::size_t need = static_cast<std::size_t>(width) * height * kChannels;
  if (bytes.size() - reader.pos() < need) throw MalformedInput("PPM raster is truncated");
  const auto raster = bytes.subspan(reader.pos(), need);
  return Image(static_cast<int>(width), static_cast<int>(height),
               std::vector<uint8_t>(raster.begin(), raster.end()));
}

std::vector<uint8_t> SavePpm(const Image &image) {
  const std::string header = "P6\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.bytes().begin(), image.bytes().end());
  return out;
}

}  // namespace sra
