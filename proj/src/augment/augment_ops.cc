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

#include "sra/augment_ops.h"

#include <cctype>
#include <cmath>

#include "sra/error.h"

namespace sra {

std::string_view OpName(OpKind kind) {
  switch (kind) {
    case OpKind::kShearX: return "ShearX";
    case OpKind::kShearY: return "ShearY";
    case OpKind::kTranslateX: return "TranslateX";
    case OpKind::kTranslateY: return "TranslateY";
    case OpKind::kRotate: return "Rotate";
    case OpKind::kBrightness: return "Brightness";
    case OpKind::kColor: return "Color";
    case OpKind::kSharpness: return "Sharpness";
    case OpKind::kContrast: return "Contrast";
    case OpKind::kSolarize: return "Solarize";
    case OpKind::kPosterize: return "Posterize";
    case OpKind::kEqualize: return "Equalize";
    case OpKind::kAutoContrast: return "AutoContrast";
    case OpKind::kIdentity: return "Identity";
  }
  return "?";
}

std::optional<OpKind> ParseOpKind(std::string_view name) {
  auto lower_eq = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(a[i])) !=
          std::tolower(static_cast<unsigned char>(b[i]))) {
        return false;
      }
    }
    return true;
  };
  for (OpKind k : kAllOpKinds) {
    if (lower_eq(name, OpName(k))) return k;
  }
  return std::nullopt;
}

bool IsGeometric(OpKind kind) {
  return kind == OpKind::kShearX || kind == OpKind::kShearY || kind == OpKind::kTranslateX ||
         kind == OpKind::kTranslateY || kind == OpKind::kRotate;
}

bool IsSigned(OpKind kind) {
  return IsGeometric(kind) || kind == OpKind::kBrightness || kind == OpKind::kColor ||
         kind == OpKind::kSharpness || kind == OpKind::kContrast;
}

bool IsParameterless(OpKind kind) {
  return kind == OpKind::kEqualize || kind == OpKind::kAutoContrast ||
         kind == OpKind::kIdentity;
}

std::optional<double> MapMagnitude(OpKind kind, double magnitude, int sign) {
  Expect(magnitude >= 0.0 && magnitude <= 1.0, "magnitude must lie in [0, 1]");
  Expect(sign == 1 || sign == -1, "sign must be +1 or -1");
  const double s = IsSigned(kind) ? sign : 1.0;
  switch (kind) {
    case OpKind::kShearX:
    case OpKind::kShearY:
      return s * 0.3 * magnitude;
    case OpKind::kTranslateX:
    case OpKind::kTranslateY:
      return s * 0.45 * magnitude;
    case OpKind::kRotate:
      return s * 30.0 * magnitude;
    case OpKind::kBrightness:
    case OpKind::kColor:
    case OpKind::kSharpness:
    case OpKind::kContrast:
      return 1.0 + s * 0.9 * magnitude;
    case OpKind::kSolarize:
      return std::round(256.0 * (1.0 - magnitude));
    case OpKind::kPosterize:
      return 8.0 - std::round(4.0 * magnitude);
    case OpKind::kEqualize:
    case OpKind::kAutoContrast:
    case OpKind::kIdentity:
      return std::nullopt;
  }
  return std::nullopt;
}

Image ApplyOp(const Image &img, const OpApplication &app) {
  const std::optional<double> param = MapMagnitude(app.kind, app.magnitude, app.sign);
  switch (app.kind) {
    case OpKind::kShearX:
      return *param == 0.0 ? img : AffineWarp(img, ShearXMatrix(*param), app.fill);
    case OpKind::kShearY:
      return *param == 0.0 ? img : AffineWarp(img, ShearYMatrix(*param), app.fill);
    case OpKind::kTranslateX: {
      const double px = std::trunc(*param * img.width());
      return px == 0.0 ? img : AffineWarp(img, TranslateMatrix(px, 0.0), app.fill);
    }
    case OpKind::kTranslateY: {
      const double px = std::trunc(*param * img.height());
      return px == 0.0 ? img : AffineWarp(img, TranslateMatrix(0.0, px), app.fill);
    }
    case OpKind::kRotate:
      return *param == 0.0 ? img : AffineWarp(img, RotateMatrix(*param), app.fill);
    case OpKind::kBrightness:
      return *param == 1.0 ? img : Blend(img, Image(img.width(), img.height(), 0), *param);
    case OpKind::kColor:
      return *param == 1.0 ? img : Blend(img, GrayscaleDegenerate(img), *param);
    case OpKind::kSharpness:
      return *param == 1.0 ? img : Blend(img, SmoothDegenerate(img), *param);
    case OpKind::kContrast:
      return *param == 1.0 ? img : Blend(img, MeanLumaDegenerate(img), *param);
    case OpKind::kSolarize:
      return Solarize(img, static_cast<int>(*param));
    case OpKind::kPosterize:
      return Posterize(img, static_cast<int>(*param));
    case OpKind::kEqualize:
      return Equalize(img);
    case OpKind::kAutoContrast:
      return AutoContrast(img);
    case OpKind::kIdentity:
      return img;
  }
  return img;
}

}  // namespace sra
