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

#include <vector>

#include "sra/augment_ops.h"
#include "sra/rng.h"

namespace sra {

struct PolicyConfig {
  int depth = 2;
  std::vector<OpKind> operator_subset{kAllOpKinds.begin(), kAllOpKinds.end()};
  Rgb fill = kDefaultFill;

  void Validate() const;
  friend bool operator==(const PolicyConfig &, const PolicyConfig &) = default;
};

struct SubPolicy {
  std::vector<OpApplication> apps;

  friend bool operator==(const SubPolicy &, const SubPolicy &) = default;
};

// RandAugment baseline: N operators at level M of 30, optionally jittered
// by a normal with standard deviation `magnitude_std` (timm-style).
struct RaBaselineConfig {
  int n_ops = 2;
  double magnitude_level = 9.0;
  double magnitude_std = 0.0;

  void Validate() const;
  friend bool operator==(const RaBaselineConfig &, const RaBaselineConfig &) = default;
};

// Each sampler forks two sub-streams off `rng`, in order: one for kinds and
// signs, one for magnitudes. Refinement forks (and ignores) the magnitude
// stream too, so explore and refine draw identical kinds under one stream.

// Exploration: uniform kinds with replacement, magnitudes ~ U(0, 1).
SubPolicy SampleExplore(const PolicyConfig &cfg, Stream &rng);

// Refinement: as exploration, but every magnitude equals `mis`.
SubPolicy SampleRefine(const PolicyConfig &cfg, double mis, Stream &rng);

// Baseline: cfg.n_ops kinds from policy.operator_subset,
// m = clamp((M + std * z) / 30, 0, 1).
SubPolicy SampleRaBaseline(const RaBaselineConfig &cfg, const PolicyConfig &policy,
                           Stream &rng);

Image AugmentImage(const Image &img, const SubPolicy &sub);

}  // namespace sra
