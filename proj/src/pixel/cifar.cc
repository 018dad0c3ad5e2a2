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

#include <string>

#include "sra/error.h"
#include "sra/image.h"

namespace sra {

std::size_t CifarRecordSize(CifarFormat format) {
  return format == CifarFormat::kCifar10 ? kCifarPixels + 1 : kCifarPixels + 2;
}

int CifarClassCount(CifarFormat format) {
  return format == CifarFormat::kCifar10 ? 10 : 100;
}

Dataset LoadCifarBatch(std::span<const uint8_t> bytes, CifarFormat format, Split split) {
  const std::size_t record = CifarRecordSize(format);
  if (bytes.size() % record != 0) {
    throw MalformedInput("CIFAR payload of " + std::to_string(bytes.size()) +
                         " bytes is not a multiple of the " + std::to_string(record) +
                         "-byte record size");
  }
  constexpr std::size_t kPlane = 32 * 32;
  const std::size_t label_offset = format == CifarFormat::kCifar10 ? 0 : 1;
  const std::size_t pixel_offset = record - kCifarPixels;

  Dataset out;
  out.class_count = CifarClassCount(format);
  out.split = split;
  out.samples.reserve(bytes.size() / record);
  for (std::size_t start = 0; start < bytes.size(); start += record) {
    const auto rec = bytes.subspan(start, record);
    const int label = rec[label_offset];
    if (label >= out.class_count) {
      throw CorruptRecord("CIFAR record " + std::to_string(start / record) + " has label " +
                          std::to_string(label));
    }
    // Planar R, G, B -> interleaved.
    std::vector<uint8_t> pixels(kCifarPixels);
    const uint8_t *planes = rec.data() + pixel_offset;
    for (std::size_t i = 0; i < kPlane; ++i) {
      pixels[3 * i + 0] = planes[i];
      pixels[3 * i + 1] = planes[kPlane + i];
      pixels[3 * i + 2] = planes[2 * kPlane + i];
    }
    out.samples.push_back({Image(32, 32, std::move(pixels)), label});
  }
  return out;
}

}  // namespace sra
