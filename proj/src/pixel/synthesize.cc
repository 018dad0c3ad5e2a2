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

#include <algorithm>
#include <cmath>

#include "sra/error.h"
#include "sra/image.h"
#include "sra/rng.h"

namespace sra {
namespace {

enum class Shape { kDisc, kSquare, kTriangle, kCross };

Rgb HsvToRgb(double hue_deg, double sat, double val) {
  hue_deg = std::fmod(std::fmod(hue_deg, 360.0) + 360.0, 360.0);
  const double c = val * sat;
  const double x = c * (1.0 - std::fabs(std::fmod(hue_deg / 60.0, 2.0) - 1.0));
  const double m = val - c;
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hue_deg / 60.0)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  auto to_byte = [](double v) {
    return static_cast<uint8_t>(std::clamp(std::round(v * 255.0), 0.0, 255.0));
  };
  return {to_byte(r + m), to_byte(g + m), to_byte(b + m)};
}

bool Inside(Shape shape, double dx, double dy, double radius) {
  switch (shape) {
    case Shape::kDisc:
      return dx * dx + dy * dy <= radius * radius;
    case Shape::kSquare:
      return std::fabs(dx) <= 0.8 * radius && std::fabs(dy) <= 0.8 * radius;
    case Shape::kTriangle:
      // Apex up, base at dy = +radius.
      return dy <= radius && dy >= -radius &&
             std::fabs(dx) <= 0.5 * (dy + radius) * 0.9;
    case Shape::kCross:
      return (std::fabs(dx) <= 0.3 * radius && std::fabs(dy) <= radius) ||
             (std::fabs(dy) <= 0.3 * radius && std::fabs(dx) <= radius);
  }
  return false;
}

Image Render(int label, int class_count, int size, Stream &rng) {
  Image img(size, size);
  for (auto &v : img.bytes()) v = static_cast<uint8_t>(20 + rng.UniformInt(91));

  const Shape shape = static_cast<Shape>(label % 4);
  const double hue = 360.0 * label / class_count + (rng.Uniform() - 0.5) * 30.0;
  const Rgb color = HsvToRgb(hue, 0.85, 0.95);
  const double radius = size * (0.22 + 0.10 * rng.Uniform());
  const double cx = (size - 1) / 2.0 + (rng.Uniform() - 0.5) * 0.3 * size;
  const double cy = (size - 1) / 2.0 + (rng.Uniform() - 0.5) * 0.3 * size;

  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      if (!Inside(shape, x - cx, y - cy, radius)) continue;
      const int jitter = static_cast<int>(rng.UniformInt(31)) - 15;
      auto shade = [jitter](uint8_t v) {
        return static_cast<uint8_t>(std::clamp(v + jitter, 0, 255));
      };
      img.set_pixel(x, y, {shade(color.r), shade(color.g), shade(color.b)});
    }
  }
  return img;
}

}  // namespace

Dataset SynthesizeDataset(uint64_t seed, int class_count, int samples_per_class, int size) {
  Expect(class_count >= 2, "synthesize_dataset: class_count must be >= 2");
  Expect(samples_per_class >= 0, "synthesize_dataset: samples_per_class must be >= 0");
  Expect(size >= 4, "synthesize_dataset: size must be >= 4");
  Dataset out;
  out.class_count = class_count;
  const int total = class_count * samples_per_class;
  out.samples.reserve(total);
  // Labels cycle 0, 1, ..., c-1, 0, 1, ... so any prefix stays roughly balanced.
  for (int i = 0; i < total; ++i) {
    const int label = i % class_count;
    Stream rng = DeriveStream(seed, 0, 0, static_cast<uint64_t>(i), StreamPurpose::kData);
    out.samples.push_back({Render(label, class_count, size, rng), label});
  }
  return out;
}

}  // namespace sra
