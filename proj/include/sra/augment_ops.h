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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "sra/image.h"

namespace sra {

enum class OpKind {
  kShearX,
  kShearY,
  kTranslateX,
  kTranslateY,
  kRotate,
  kBrightness,
  kColor,
  kSharpness,
  kContrast,
  kSolarize,
  kPosterize,
  kEqualize,
  kAutoContrast,
  kIdentity,
};

inline constexpr int kOpKindCount = 14;
inline constexpr std::array<OpKind, kOpKindCount> kAllOpKinds = {
    OpKind::kShearX,     OpKind::kShearY,     OpKind::kTranslateX,  OpKind::kTranslateY,
    OpKind::kRotate,     OpKind::kBrightness, OpKind::kColor,       OpKind::kSharpness,
    OpKind::kContrast,   OpKind::kSolarize,   OpKind::kPosterize,   OpKind::kEqualize,
    OpKind::kAutoContrast, OpKind::kIdentity,
};

std::string_view OpName(OpKind kind);
// Accepts the names returned by OpName, case-insensitively.
std::optional<OpKind> ParseOpKind(std::string_view name);

// Geometric and enhancement kinds cover a symmetric range through a random sign.
bool IsSigned(OpKind kind);
bool IsParameterless(OpKind kind);
bool IsGeometric(OpKind kind);

inline constexpr Rgb kDefaultFill = {128, 128, 128};

struct OpApplication {
  OpKind kind = OpKind::kIdentity;
  double magnitude = 0.0;  // in [0, 1]
  int sign = 1;            // +1 or -1
  Rgb fill = kDefaultFill;

  friend bool operator==(const OpApplication &, const OpApplication &) = default;
};

// Native parameter of `kind` for magnitude m in [0, 1]:
//   shear factor, translate fraction of the image side, rotation degrees,
//   enhancement factor, solarize threshold, or posterize bits kept.
// Parameterless kinds return nullopt.
std::optional<double> MapMagnitude(OpKind kind, double magnitude, int sign);

// Forward affine map [a b tx; c d ty] about the image center.
using AffineMatrix = std::array<double, 6>;

inline constexpr AffineMatrix kIdentityAffine = {1, 0, 0, 0, 1, 0};

// Inverse of an affine map. Throws ContractViolation when the linear part is singular.
AffineMatrix InvertAffine(const AffineMatrix &m);

AffineMatrix ShearXMatrix(double shear);
AffineMatrix ShearYMatrix(double shear);
AffineMatrix TranslateMatrix(double dx, double dy);
// Counter-clockwise on screen for positive degrees.
AffineMatrix RotateMatrix(double degrees);

// Inverse-mapping bilinear warp about ((W-1)/2, (H-1)/2). Samples outside the
// image take the fill color, weighted by their bilinear coverage.
Image AffineWarp(const Image &img, const AffineMatrix &m, Rgb fill = kDefaultFill);

// out = clamp(round(degenerate + f * (img - degenerate))) per channel.
Image Blend(const Image &img, const Image &degenerate, double factor);

Image GrayscaleDegenerate(const Image &img);
Image MeanLumaDegenerate(const Image &img);
Image SmoothDegenerate(const Image &img);

Image Equalize(const Image &img);
Image AutoContrast(const Image &img);
Image Solarize(const Image &img, int threshold);
Image Posterize(const Image &img, int bits_kept);

Image ApplyOp(const Image &img, const OpApplication &app);

}  // namespace sra
