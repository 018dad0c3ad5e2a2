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

#include <span>
#include <string_view>
#include <optional>
#include <vector>

namespace sra {

// cosine_gamma: cos(p, onehot)^(eps / ln c). cosine_raw: plain cosine (gamma = 1).
// euclidean / jaccard: ablation scorers, both normalized onto [0, 1].
enum class MisScorer { kCosineGamma, kCosineRaw, kEuclidean, kJaccard };

std::string_view ScorerName(MisScorer scorer);
std::optional<MisScorer> ParseScorer(std::string_view name);

struct MisConfig {
  MisScorer scorer = MisScorer::kCosineGamma;
  double epsilon = 2.0;
  int class_count = 10;

  void Validate() const;
  friend bool operator==(const MisConfig &, const MisConfig &) = default;
};

// gamma = eps / ln(c).
double GammaForTask(double epsilon, int class_count);

// (p[target] / |p|)^gamma, clamped to [0, 1], with 0^0 = 1.
double CosineMis(std::span<const double> probs, int target, double gamma);
// 1 - |p - onehot| / sqrt(2).
double EuclideanMis(std::span<const double> probs, int target);
// sum(min(p, l)) / sum(max(p, l)).
double JaccardMis(std::span<const double> probs, int target);

// Max-subtracted softmax.
std::vector<double> Softmax(std::span<const double> logits);

double ComputeMis(std::span<const double> logits, int target, const MisConfig &cfg);

}  // namespace sra
