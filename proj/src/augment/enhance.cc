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
#include <array>
#include <cmath>

#include "sra/augment_ops.h"
#include "sra/error.h"

namespace sra {
namespace {

uint8_t RoundToByte(double v) {
  const double r = std::round(v);
  return static_cast<uint8_t>(r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r));
}

uint8_t Luma(const uint8_t *p) { return RoundToByte(0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]); }

}  // namespace

Image Blend(const Image &img, const Image &degenerate, double factor) {
  Expect(img.SameShape(degenerate), "blend: image and degenerate differ in size");
  if (factor == 1.0) return img;
  Image out = img;
  const auto src = img.bytes();
  const auto deg = degenerate.bytes();
  auto dst = out.bytes();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const double d = deg[i];
    dst[i] = RoundToByte(d + factor * (src[i] - d));
  }
  return out;
}

Image GrayscaleDegenerate(const Image &img) {
  Image out(img.width(), img.height());
  const auto src = img.bytes();
  auto dst = out.bytes();
  for (std::size_t i = 0; i < dst.size(); i += 3) {
    const uint8_t l = Luma(&src[i]);
    dst[i] = dst[i + 1] = dst[i + 2] = l;
  }
  return out;
}

Image MeanLumaDegenerate(const Image &img) {
  const auto src = img.bytes();
  uint64_t sum = 0;
  for (std::size_t i = 0; i < src.size(); i += 3) sum += Luma(&src[i]);
  const double mean = static_cast<double>(sum) / static_cast<double>(img.pixel_count());
  return Image(img.width(), img.height(), RoundToByte(mean));
}

Image SmoothDegenerate(const Image &img) {
  Image out = img;
  const int w = img.width();
  const int h = img.height();
  for (int y = 1; y + 1 < h; ++y) {
    const uint8_t *up = img.row(y - 1);
    const uint8_t *mid = img.row(y);
    const uint8_t *down = img.row(y + 1);
    uint8_t *dst = out.row(y);
    for (int x = 1; x + 1 < w; ++x) {
      for (int c = 0; c < 3; ++c) {
        const int l = 3 * (x - 1) + c, m = 3 * x + c, r = 3 * (x + 1) + c;
        const int sum = up[l] + up[m] + up[r] + mid[l] + 5 * mid[m] + mid[r] + down[l] +
                        down[m] + down[r];
        dst[m] = RoundToByte(sum / 13.0);
      }
    }
  }
  return out;
}

Image Equalize(const Image &img) {
  Image out = img;
  auto bytes = out.bytes();
  for (int c = 0; c < 3; ++c) {
    std::array<uint64_t, 256> hist{};
    for (std::size_t i = c; i < bytes.size(); i += 3) ++hist[bytes[i]];
    int last = 255;
    while (last > 0 && hist[last] == 0) --last;
    uint64_t total = 0;
    for (auto v : hist) total += v;
    const uint64_t step = (total - hist[last]) / 255;
    if (step == 0) continue;
    std::array<uint8_t, 256> lut{};
    uint64_t acc = step / 2;
    for (int i = 0; i < 256; ++i) {
      lut[i] = static_cast<uint8_t>(std::min<uint64_t>(acc / step, 255));
      acc += hist[i];
    }
    for (std::size_t i = c; i < bytes.size(); i += 3) bytes[i] = lut[bytes[i]];
  }
  return out;
}

// Linear stretch of [lo, hi] onto [0, 255] per channel, truncating like PIL.
Image AutoContrast(const Image &img) {
  Image out = img;
  auto bytes = out.bytes();
  for (int c = 0; c < 3; ++c) {
    int lo = 255, hi = 0;
    for (std::size_t i = c; i < bytes.size(); i += 3) {
      lo = std::min<int>(lo, bytes[i]);
      hi = std::max<int>(hi, bytes[i]);
    }
    if (lo >= hi) continue;
    for (std::size_t i = c; i < bytes.size(); i += 3) {
      bytes[i] = static_cast<uint8_t>((bytes[i] - lo) * 255 / (hi - lo));
    }
  }
  return out;
}

Image Solarize(const Image &img, int threshold) {
  Image out = img;
  for (auto &v : out.bytes()) {
    if (v >= threshold) v = static_cast<uint8_t>(255 - v);
  }
  return out;
}

Image Posterize(const Image &img, int bits_kept) {
  Expect(bits_kept >= 0 && bits_kept <= 8, "posterize: bits kept must be in [0, 8]");
  if (bits_kept == 8) return img;
  const auto mask = static_cast<uint8_t>(0xFF << (8 - bits_kept));
  Image out = img;
  for (auto &v : out.bytes()) v &= mask;
  return out;
}

}  // namespace sra
