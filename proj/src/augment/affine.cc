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

#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "sra/augment_ops.h"
#include "sra/error.h"

namespace sra {
namespace {

uint8_t RoundToByte(double v) {
  const double r = std::round(v);
  return static_cast<uint8_t>(r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r));
}

// Integer shift: every source coordinate lands on a pixel centre, so the
// bilinear weights are exactly {1, 0, 0, 0} and the warp is a copy with fill.
Image ShiftInteger(const Image &img, int dx, int dy, Rgb fill) {
  const int w = img.width();
  const int h = img.height();
  Image out(w, h);
  const uint8_t fill_px[3] = {fill.r, fill.g, fill.b};
  for (int y = 0; y < h; ++y) {
    uint8_t *dst = out.row(y);
    const int sy = y - dy;
    if (sy < 0 || sy >= h) {
      for (int x = 0; x < w; ++x) std::memcpy(dst + 3 * x, fill_px, 3);
      continue;
    }
    const uint8_t *src = img.row(sy);
    const int first = std::max(0, dx);          // first output column with a source
    const int last = std::min(w, w + dx);       // one past the last
    for (int x = 0; x < first && x < w; ++x) std::memcpy(dst + 3 * x, fill_px, 3);
    if (last > first) {
      std::memcpy(dst + 3 * first, src + 3 * (first - dx),
                  static_cast<std::size_t>(last - first) * 3);
    }
    for (int x = std::max(last, 0); x < w; ++x) std::memcpy(dst + 3 * x, fill_px, 3);
  }
  return out;
}

bool IsIntegerShift(const AffineMatrix &m) {
  return m[0] == 1.0 && m[1] == 0.0 && m[3] == 0.0 && m[4] == 1.0 &&
         m[2] == std::trunc(m[2]) && m[5] == std::trunc(m[5]) &&
         std::fabs(m[2]) < 1e9 && std::fabs(m[5]) < 1e9;
}

}  // namespace

AffineMatrix InvertAffine(const AffineMatrix &m) {
  const double det = m[0] * m[4] - m[1] * m[3];
  Expect(det != 0.0 && std::isfinite(det), "affine_warp: singular linear part");
  const double a = m[4] / det;
  const double b = -m[1] / det;
  const double c = -m[3] / det;
  const double d = m[0] / det;
  return {a, b, -(a * m[2] + b * m[5]), c, d, -(c * m[2] + d * m[5])};
}

AffineMatrix ShearXMatrix(double shear) { return {1, shear, 0, 0, 1, 0}; }
AffineMatrix ShearYMatrix(double shear) { return {1, 0, 0, shear, 1, 0}; }
AffineMatrix TranslateMatrix(double dx, double dy) { return {1, 0, dx, 0, 1, dy}; }

AffineMatrix RotateMatrix(double degrees) {
  const double rad = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  return {c, s, 0, -s, c, 0};
}

Image AffineWarp(const Image &img, const AffineMatrix &m, Rgb fill) {
  if (m == kIdentityAffine) return img;
  if (IsIntegerShift(m)) {
    return ShiftInteger(img, static_cast<int>(m[2]), static_cast<int>(m[5]), fill);
  }
  const AffineMatrix inv = InvertAffine(m);
  const int w = img.width();
  const int h = img.height();
  const double cx = (w - 1) / 2.0;
  const double cy = (h - 1) / 2.0;
  const double fill_px[3] = {double(fill.r), double(fill.g), double(fill.b)};

  // Column terms are shared by every row.
  std::vector<double> col_x(w), col_y(w);
  for (int x = 0; x < w; ++x) {
    col_x[x] = inv[0] * (x - cx);
    col_y[x] = inv[3] * (x - cx);
  }

  Image out(w, h);
  for (int y = 0; y < h; ++y) {
    const double row_x = inv[1] * (y - cy);
    const double row_y = inv[4] * (y - cy);
    uint8_t *dst = out.row(y);
    for (int x = 0; x < w; ++x, dst += 3) {
      const double sx = col_x[x] + row_x + inv[2] + cx;
      const double sy = col_y[x] + row_y + inv[5] + cy;
      const double fx0 = std::floor(sx);
      const double fy0 = std::floor(sy);
      const double fx = sx - fx0;
      const double fy = sy - fy0;
      const double w00 = (1.0 - fx) * (1.0 - fy);
      const double w10 = fx * (1.0 - fy);
      const double w01 = (1.0 - fx) * fy;
      const double w11 = fx * fy;

      if (fx0 >= 0.0 && fx0 + 1.0 <= w - 1 && fy0 >= 0.0 && fy0 + 1.0 <= h - 1) {
        const int x0 = static_cast<int>(fx0);
        const int y0 = static_cast<int>(fy0);
        const uint8_t *p0 = img.row(y0) + 3 * x0;
        const uint8_t *p1 = img.row(y0 + 1) + 3 * x0;
        for (int c = 0; c < 3; ++c) {
          dst[c] = RoundToByte(w00 * p0[c] + w10 * p0[3 + c] + w01 * p1[c] + w11 * p1[3 + c]);
        }
        continue;
      }
      // Coordinates far outside the image: every neighbour is fill.
      if (fx0 < -2.0 || fx0 > w || fy0 < -2.0 || fy0 > h) {
        for (int c = 0; c < 3; ++c) {
          dst[c] = RoundToByte(w00 * fill_px[c] + w10 * fill_px[c] + w01 * fill_px[c] +
                               w11 * fill_px[c]);
        }
        continue;
      }
      const int x0 = static_cast<int>(fx0);
      const int y0 = static_cast<int>(fy0);
      auto sample = [&](int xs, int ys, int c) -> double {
        if (xs < 0 || xs >= w || ys < 0 || ys >= h) return fill_px[c];
        return img.at(xs, ys, c);
      };
      for (int c = 0; c < 3; ++c) {
        dst[c] = RoundToByte(w00 * sample(x0, y0, c) + w10 * sample(x0 + 1, y0, c) +
                             w01 * sample(x0, y0 + 1, c) + w11 * sample(x0 + 1, y0 + 1, c));
      }
    }
  }
  return out;
}

}  // namespace sra
