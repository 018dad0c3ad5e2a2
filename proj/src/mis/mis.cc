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

#include "sra/mis.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sra/error.h"

namespace sra {
namespace {

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void CheckTarget(std::span<const double> probs, int target) {
  Expect(target >= 0 && static_cast<std::size_t>(target) < probs.size(),
         "MIS target index out of range");
}

}  // namespace

std::string_view ScorerName(MisScorer scorer) {
  switch (scorer) {
    case MisScorer::kCosineGamma: return "cosine_gamma";
    case MisScorer::kCosineRaw: return "cosine_raw";
    case MisScorer::kEuclidean: return "euclidean";
    case MisScorer::kJaccard: return "jaccard";
  }
  return "?";
}

std::optional<MisScorer> ParseScorer(std::string_view name) {
  for (auto s : {MisScorer::kCosineGamma, MisScorer::kCosineRaw, MisScorer::kEuclidean,
                 MisScorer::kJaccard}) {
    if (name == ScorerName(s)) return s;
  }
  return std::nullopt;
}

void MisConfig::Validate() const {
  if (!(epsilon >= 0.0)) throw ConfigError("mis.epsilon must be >= 0");
  if (class_count < 2) throw ConfigError("MIS class count must be >= 2");
}

double GammaForTask(double epsilon, int class_count) {
  Expect(class_count >= 2, "gamma_for_task: class count must be >= 2");
  Expect(epsilon >= 0.0, "gamma_for_task: epsilon must be >= 0");
  return epsilon / std::log(static_cast<double>(class_count));
}

double CosineMis(std::span<const double> probs, int target, double gamma) {
  CheckTarget(probs, target);
  Expect(gamma >= 0.0, "cosine_mis: gamma must be >= 0");
  double norm_sq = 0.0;
  for (double p : probs) norm_sq += p * p;
  if (norm_sq == 0.0) return gamma == 0.0 ? 1.0 : 0.0;
  const double cosine = Clamp01(probs[target] / std::sqrt(norm_sq));
  return Clamp01(std::pow(cosine, gamma));
}

double EuclideanMis(std::span<const double> probs, int target) {
  CheckTarget(probs, target);
  double dist_sq = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double d = probs[i] - (static_cast<int>(i) == target ? 1.0 : 0.0);
    dist_sq += d * d;
  }
  return Clamp01(1.0 - std::sqrt(dist_sq) / std::numbers::sqrt2);
}

double JaccardMis(std::span<const double> probs, int target) {
  CheckTarget(probs, target);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double l = static_cast<int>(i) == target ? 1.0 : 0.0;
    num += std::min(probs[i], l);
    den += std::max(probs[i], l);
  }
  return den == 0.0 ? 0.0 : Clamp01(num / den);
}

std::vector<double> Softmax(std::span<const double> logits) {
  std::vector<double> out(logits.size());
  if (logits.empty()) return out;
  const double peak = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - peak);
    sum += out[i];
  }
  for (double &v : out) v /= sum;
  return out;
}

double ComputeMis(std::span<const double> logits, int target, const MisConfig &cfg) {
  Expect(logits.size() == static_cast<std::size_t>(cfg.class_count),
         "compute_mis: expected " + std::to_string(cfg.class_count) + " logits, got " +
             std::to_string(logits.size()));
  const std::vector<double> probs = Softmax(logits);
  switch (cfg.scorer) {
    case MisScorer::kCosineGamma:
      return CosineMis(probs, target, GammaForTask(cfg.epsilon, cfg.class_count));
    case MisScorer::kCosineRaw:
      return CosineMis(probs, target, 1.0);
    case MisScorer::kEuclidean:
      return EuclideanMis(probs, target);
    case MisScorer::kJaccard:
      return JaccardMis(probs, target);
  }
  return 0.0;
}

}  // namespace sra
