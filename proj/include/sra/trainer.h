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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sra/image.h"
#include "sra/mis.h"
#include "sra/model.h"
#include "sra/policy.h"
#include "sra/rng.h"

namespace sra {

// kSra is the full explore/refine loop. kBasic trains on raw images and
// kRaBaseline on RandAugment samples, both with two batch-B updates per large
// batch so the update count matches kSra. The remaining modes are ablations:
//   kNoExploreRandom  first half trains un-augmented
//   kAllExplore       both halves take random magnitudes, nothing is scored
//   kAllRefine        both halves are scored and refined
//   kOneBatch         the whole large batch is explored, then scored and refined
enum class TrainMode {
  kSra,
  kRaBaseline,
  kBasic,
  kNoExploreRandom,
  kAllExplore,
  kAllRefine,
  kOneBatch,
};

std::string_view ModeName(TrainMode mode);
std::optional<TrainMode> ParseMode(std::string_view name);

struct TrainConfig {
  TrainMode mode = TrainMode::kSra;
  PolicyConfig policy;
  RaBaselineConfig ra;
  MisConfig mis;  // class_count is taken from the dataset at train time
  int epochs = 30;
  int large_batch_size = 128;
  int repeat = 1;  // Batch Augment copies per sample
  uint64_t seed = 0;

  std::string arch = kDefaultArch;
  NormConfig norm;
  double base_lr = 0.05;
  double momentum = 0.9;
  double weight_decay = 5e-4;
  double label_smoothing = 0.0;
  int warmup_epochs = 2;

  int eval_every = 1;
  int threads = 1;
  bool record_seconds = false;

  void Validate() const;
  friend bool operator==(const TrainConfig &, const TrainConfig &) = default;
};

struct MetricsRecord {
  int epoch = 0;
  double explore_loss = 0.0;  // mean loss of the first update per large batch
  double refine_loss = 0.0;   // mean loss of the second update per large batch
  std::optional<double> mean_mis;
  double lr = 0.0;
  std::optional<double> test_acc;
  std::optional<double> seconds;
};

inline constexpr std::string_view kMetricsHeader =
    "epoch,explore_loss,refine_loss,mean_mis,lr,test_acc,seconds";
std::string FormatMetricsRow(const MetricsRecord &record);

struct TrainState {
  Model model;
  OptimState optim;
  LrSchedule schedule;
  int64_t global_iter = 0;  // weight updates so far
  int64_t batches = 0;      // large batches so far
  int epoch = 0;
  uint64_t seed = 0;
};

enum class StepKind { kExplore, kRefine, kRaw, kBaseline };

struct UpdateEvent {
  StepKind kind;
  int64_t global_iter;  // value before the update
  double lr;
  std::size_t batch_size;
  double loss;
};

struct ScoreEvent {
  std::size_t samples;
  uint64_t checksum_before;
  uint64_t checksum_after;
  uint64_t optim_checksum_before;
  uint64_t optim_checksum_after;
  std::span<const double> scores;
};

struct AugmentEvent {
  StepKind kind;
  std::span<const LabeledImage> source;
  std::span<const LabeledImage> augmented;
  std::span<const SubPolicy> policies;
};

// Instrumentation hooks; every method defaults to a no-op.
class TrainObserver {
 public:
  virtual ~TrainObserver() = default;
  virtual void OnUpdate(const UpdateEvent &) {}
  virtual void OnScore(const ScoreEvent &) {}
  virtual void OnAugment(const AugmentEvent &) {}
};

// Per-sample augmentation copies, labels duplicated contiguously.
struct ExpandedBatch {
  std::vector<LabeledImage> samples;
  std::vector<SubPolicy> policies;
};

using StreamFactory = std::function<Stream(std::size_t sample, int copy)>;
using PolicySampler = std::function<SubPolicy(std::size_t sample, Stream &rng)>;

// Repeats each sample `repeat` times, each copy with its own stream and
// sub-policy. Output order is sample-major: copies of sample i occupy
// [i * repeat, (i + 1) * repeat).
ExpandedBatch BatchAugmentExpand(std::span<const LabeledImage> batch, int repeat,
                                 const StreamFactory &streams, const PolicySampler &sampler,
                                 int threads = 1);

// Maps (logits, label) to a score; defaults to ComputeMis with the run's config.
using ScoreFn = std::function<double(std::span<const double> logits, int label)>;

class Trainer {
 public:
  // `updates_per_epoch` sizes the learning-rate schedule.
  Trainer(const TrainConfig &cfg, int class_count, int height, int width,
          int64_t updates_per_epoch);

  TrainState &state() { return state_; }
  const TrainState &state() const { return state_; }
  const TrainConfig &config() const { return cfg_; }

  void set_observer(TrainObserver *observer) { observer_ = observer; }
  void set_scorer(ScoreFn scorer) { scorer_ = std::move(scorer); }

  // Runs one large batch according to the configured mode.
  void RunIteration(std::span<const LabeledImage> large_batch);
  void SraIteration(std::span<const LabeledImage> large_batch);
  void AblationIteration(std::span<const LabeledImage> large_batch, TrainMode variant);
  void BaselineIteration(std::span<const LabeledImage> large_batch);

  void BeginEpoch(int epoch);
  // Closes the epoch's loss/MIS accumulators into a record (no test accuracy).
  MetricsRecord EndEpoch() const;

 private:
  ExpandedBatch Explore(std::span<const LabeledImage> samples, std::size_t first_index);
  ExpandedBatch Refine(std::span<const LabeledImage> samples, std::span<const double> mis,
                       std::size_t first_index);
  ExpandedBatch Raw(std::span<const LabeledImage> samples);
  ExpandedBatch Baseline(std::span<const LabeledImage> samples, std::size_t first_index);
  std::vector<double> Score(std::span<const LabeledImage> samples);
  double Update(const ExpandedBatch &batch, StepKind kind);
  void Record(std::span<const LabeledImage> source, const ExpandedBatch &batch, StepKind kind);

  Stream SampleStream(StreamPurpose purpose, std::size_t sample, int copy) const;

  TrainConfig cfg_;
  MisConfig mis_;
  TrainState state_;
  TrainObserver *observer_ = nullptr;
  ScoreFn scorer_;

  // Epoch accumulators.
  double first_loss_sum_ = 0.0;
  double second_loss_sum_ = 0.0;
  int64_t first_updates_ = 0;
  int64_t second_updates_ = 0;
  double mis_sum_ = 0.0;
  int64_t mis_count_ = 0;
  bool second_update_ = false;
  double last_lr_ = 0.0;
};

// Fraction of samples whose argmax logit (lowest index on ties) equals the label.
double Evaluate(const Model &model, const Dataset &dataset, const NormConfig &norm,
                int threads = 1);

struct TrainOutputs {
  std::string metrics_path;     // empty: do not write
  std::string checkpoint_path;  // empty: do not write
};

struct TrainResult {
  Model model;
  OptimState optim;
  std::vector<MetricsRecord> history;
  int64_t updates = 0;
};

// Full training run. Throws ConfigError when the datasets disagree on class count.
TrainResult Train(const TrainConfig &cfg, const Dataset &train_set, const Dataset &test_set,
                  const TrainOutputs &outputs = {}, TrainObserver *observer = nullptr);

}  // namespace sra
