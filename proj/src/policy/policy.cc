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

#include "sra/policy.h"

#include <algorithm>

#include "sra/error.h"

namespace sra {
namespace {

constexpr uint64_t kKindStreamTag = 0x4b494e44;   // "KIND"
constexpr uint64_t kMagnitudeStreamTag = 0x4d41474e;  // "MAGN"

// Kind then sign per slot, so slot i consumes the same draws in every sampler.
std::vector<OpApplication> DrawKinds(const std::vector<OpKind> &subset, int count, Rgb fill,
                                     Stream &kinds) {
  std::vector<OpApplication> apps(count);
  for (auto &app : apps) {
    app.kind = subset[kinds.UniformInt(subset.size())];
    app.sign = kinds.Bernoulli(0.5) ? 1 : -1;
    app.fill = fill;
  }
  return apps;
}

}  // namespace

void PolicyConfig::Validate() const {
  if (depth < 1) throw ConfigError("policy depth must be >= 1");
  if (operator_subset.empty()) throw ConfigError("policy operator subset must be nonempty");
}

void RaBaselineConfig::Validate() const {
  if (n_ops < 1) throw ConfigError("ra.n_ops must be >= 1");
  if (magnitude_level < 0.0 || magnitude_level > 30.0) {
    throw ConfigError("ra.magnitude must lie in [0, 30]");
  }
  if (magnitude_std < 0.0) throw ConfigError("ra.magnitude_std must be >= 0");
}

SubPolicy SampleExplore(const PolicyConfig &cfg, Stream &rng) {
  Stream kinds = rng.Fork(kKindStreamTag);
  Stream magnitudes = rng.Fork(kMagnitudeStreamTag);
  SubPolicy sub{DrawKinds(cfg.operator_subset, cfg.depth, cfg.fill, kinds)};
  for (auto &app : sub.apps) app.magnitude = magnitudes.Uniform();
  return sub;
}

SubPolicy SampleRefine(const PolicyConfig &cfg, double mis, Stream &rng) {
  Expect(mis >= 0.0 && mis <= 1.0, "sample_refine: MIS must lie in [0, 1]");
  Stream kinds = rng.Fork(kKindStreamTag);
  rng.Fork(kMagnitudeStreamTag);
  SubPolicy sub{DrawKinds(cfg.operator_subset, cfg.depth, cfg.fill, kinds)};
  for (auto &app : sub.apps) app.magnitude = mis;
  return sub;
}

SubPolicy SampleRaBaseline(const RaBaselineConfig &cfg, const PolicyConfig &policy,
                           Stream &rng) {
  Stream kinds = rng.Fork(kKindStreamTag);
  Stream magnitudes = rng.Fork(kMagnitudeStreamTag);
  SubPolicy sub{DrawKinds(policy.operator_subset, cfg.n_ops, policy.fill, kinds)};
  for (auto &app : sub.apps) {
    double level = cfg.magnitude_level;
    if (cfg.magnitude_std > 0.0) level += cfg.magnitude_std * magnitudes.Normal();
    app.magnitude = std::clamp(level / 30.0, 0.0, 1.0);
  }
  return sub;
}

Image AugmentImage(const Image &img, const SubPolicy &sub) {
  Image out = img;
  for (const auto &app : sub.apps) out = ApplyOp(out, app);
  return out;
}

}  // namespace sra
