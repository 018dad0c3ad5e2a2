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

#include "sra/image.h"

#include <fstream>
#include <iterator>

#include "sra/error.h"

namespace sra {

Image::Image(int width, int height, uint8_t value) : width_(width), height_(height) {
  Expect(width >= 1 && height >= 1, "image dimensions must be positive");
  data_.assign(pixel_count() * kChannels, value);
}

Image::Image(int width, int height, std::vector<uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  Expect(width >= 1 && height >= 1, "image dimensions must be positive");
  Expect(data_.size() == pixel_count() * kChannels,
         "image byte count does not match width*height*3");
}

Rgb Image::pixel(int x, int y) const {
  const uint8_t *p = data_.data() + Offset(x, y);
  return {p[0], p[1], p[2]};
}

void Image::set_pixel(int x, int y, Rgb value) {
  uint8_t *p = data_.data() + Offset(x, y);
  p[0] = value.r;
  p[1] = value.g;
  p[2] = value.b;
}

void Dataset::Validate() const {
  Expect(class_count >= 2, "dataset needs at least 2 classes");
  for (const auto &s : samples) {
    Expect(s.label >= 0 && s.label < class_count, "dataset label out of range");
  }
}

std::vector<uint8_t> ReadFileBytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteFileBytes(const std::string &path, std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw MalformedInput("cannot write " + path);
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw MalformedInput("short write to " + path);
}

}  // namespace sra
