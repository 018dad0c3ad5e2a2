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

#include "sra/trainer.h"

#include <chrono>
#include <cstring>
#include <fstream>
#include <numeric>

#include "sra/error.h"
#include "sra/parallel.h"

namespace sra {
namespace {

uint64_t VectorChecksum(std::span<const double> values) {
  uint64_t h = 0xcbf29ce484222325ull;
  const auto *bytes = reinterpret_cast<const unsigned char *>(values.data());
  for (std::size_t i = 0; i < values.size_bytes(); ++i) h = (h ^ bytes[i]) * 0x100000001b3ull;
  return h;
}

std::vector<int> Labels(const std::vector<LabeledImage> &samples) {
  std::vector<int> labels(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) labels[i] = samples[i].label;
  return labels;
}

}  // namespace

std::string_view ModeName(TrainMode mode) {
  switch (mode) {
    case TrainMode::kSra: return "sra";
    case TrainMode::kRaBaseline: return "ra_baseline";
    case TrainMode::kBasic: return "basic";
    case TrainMode::kNoExploreRandom: return "ablation-no_explore_random";
    case TrainMode::kAllExplore: return "ablation-all_explore";
    case TrainMode::kAllRefine: return "ablation-all_refine";
    case TrainMode::kOneBatch: return "ablation-one_batch";
  }
  return "?";
}

std::optional<TrainMode> ParseMode(std::string_view name) {
  for (auto m : {TrainMode::kSra, TrainMode::kRaBaseline, TrainMode::kBasic,
                 TrainMode::kNoExploreRandom, TrainMode::kAllExplore, TrainMode::kAllRefine,
                 TrainMode::kOneBatch}) {
    if (name == ModeName(m)) return m;
  }
  return std::nullopt;
}

void TrainConfig::Validate() const {
  policy.Validate();
  ra.Validate();
  if (!(mis.epsilon >= 0.0)) throw ConfigError("mis.epsilon must be >= 0");
  if (epochs < 0) throw ConfigError("trainer.epochs must be >= 0");
  if (large_batch_size < 2 || large_batch_size % 2 != 0) {
    throw ConfigError("trainer.large_batch_size must be even and >= 2");
  }
  if (repeat < 1) throw ConfigError("trainer.repeat must be >= 1");
  if (!(base_lr >= 0.0)) throw ConfigError("optim.base_lr must be >= 0");
  if (!(momentum >= 0.0 && momentum < 1.0)) throw ConfigError("optim.momentum must lie in [0, 1)");
  if (!(weight_decay >= 0.0)) throw ConfigError("optim.weight_decay must be >= 0");
  if (!(label_smoothing >= 0.0 && label_smoothing < 1.0)) {
    throw ConfigError("optim.label_smoothing must lie in [0, 1)");
  }
  if (warmup_epochs < 0) throw ConfigError("optim.warmup_epochs must be >= 0");
  if (epochs > 0 && warmup_epochs >= epochs) {
    throw ConfigError("optim.warmup_epochs must be smaller than trainer.epochs");
  }
  if (eval_every < 1) throw ConfigError("trainer.eval_every must be >= 1");
  if (threads < 1) throw ConfigError("trainer.threads must be >= 1");
  for (double s : norm.std) {
    if (!(s > 0.0)) throw ConfigError("model.norm_std entries must be > 0");
  }
}

ExpandedBatch BatchAugmentExpand(std::span<const LabeledImage> batch, int repeat,
                                 const StreamFactory &streams, const PolicySampler &sampler,
                                 int threads) {
  Expect(repeat >= 1, "batch_augment_expand: repeat must be >= 1");
  const std::size_t total = batch.size() * repeat;
  ExpandedBatch out;
  out.samples.resize(total);
  out.policies.resize(total);
  ParallelFor(total, threads, [&](std::size_t slot) {
    const std::size_t i = slot / repeat;
    const int copy = static_cast<int>(slot % repeat);
    Stream rng = streams(i, copy);
    out.policies[slot] = sampler(i, rng);
    out.samples[slot] = {AugmentImage(batch[i].image, out.policies[slot]), batch[i].label};
  });
  return out;
}

Trainer::Trainer(const TrainConfig &cfg, int class_count, int height, int width,
                 int64_t updates_per_epoch)
    : cfg_(cfg) {
  cfg_.Validate();
  mis_ = cfg_.mis;
  mis_.class_count = class_count;
  mis_.Validate();

  state_.seed = cfg_.seed;
  state_.model = Model(height, width, cfg_.arch, class_count);
  Stream init = DeriveStream(cfg_.seed, 0, 0, 0, StreamPurpose::kInit);
  state_.model.InitializeHe(init);
  state_.optim.base_lr = cfg_.base_lr;
  state_.optim.momentum = cfg_.momentum;
  state_.optim.weight_decay = cfg_.weight_decay;
  state_.optim.label_smoothing = cfg_.label_smoothing;
  state_.optim.velocity.assign(state_.model.param_count(), 0.0);
  state_.schedule = {cfg_.warmup_epochs, cfg_.epochs, updates_per_epoch, cfg_.base_lr};
}

Stream Trainer::SampleStream(StreamPurpose purpose, std::size_t sample, int copy) const {
  return DeriveStream(state_.seed, static_cast<uint64_t>(state_.epoch),
                      static_cast<uint64_t>(state_.batches),
                      static_cast<uint64_t>(sample) * cfg_.repeat + copy, purpose);
}

ExpandedBatch Trainer::Explore(std::span<const LabeledImage> samples, std::size_t first_index) {
  auto batch = BatchAugmentExpand(
      samples, cfg_.repeat,
      [&](std::size_t i, int copy) {
        return SampleStream(StreamPurpose::kExplore, first_index + i, copy);
      },
      [&](std::size_t, Stream &rng) { return SampleExplore(cfg_.policy, rng); }, cfg_.threads);
  Record(samples, batch, StepKind::kExplore);
  return batch;
}

ExpandedBatch Trainer::Refine(std::span<const LabeledImage> samples, std::span<const double> mis,
                              std::size_t first_index) {
  auto batch = BatchAugmentExpand(
      samples, cfg_.repeat,
      [&](std::size_t i, int copy) {
        return SampleStream(StreamPurpose::kRefine, first_index + i, copy);
      },
      [&](std::size_t i, Stream &rng) { return SampleRefine(cfg_.policy, mis[i], rng); },
      cfg_.threads);
  Record(samples, batch, StepKind::kRefine);
  return batch;
}

ExpandedBatch Trainer::Raw(std::span<const LabeledImage> samples) {
  auto batch = BatchAugmentExpand(
      samples, cfg_.repeat, [](std::size_t, int) { return Stream(0); },
      [](std::size_t, Stream &) { return SubPolicy{}; }, cfg_.threads);
  Record(samples, batch, StepKind::kRaw);
  return batch;
}

ExpandedBatch Trainer::Baseline(std::span<const LabeledImage> samples, std::size_t first_index) {
  auto batch = BatchAugmentExpand(
      samples, cfg_.repeat,
      [&](std::size_t i, int copy) {
        return SampleStream(StreamPurpose::kBaseline, first_index + i, copy);
      },
      [&](std::size_t, Stream &rng) { return SampleRaBaseline(cfg_.ra, cfg_.policy, rng); },
      cfg_.threads);
  Record(samples, batch, StepKind::kBaseline);
  return batch;
}

void Trainer::Record(std::span<const LabeledImage> source, const ExpandedBatch &batch,
                     StepKind kind) {
  if (observer_) observer_->OnAugment({kind, source, batch.samples, batch.policies});
}

std::vector<double> Trainer::Score(std::span<const LabeledImage> samples) {
  const uint64_t before = state_.model.ParamChecksum();
  const uint64_t optim_before = VectorChecksum(state_.optim.velocity);
  const Tensor input = NormalizeImages(samples, cfg_.norm);
  const Model &model = state_.model;
  const std::vector<double> logits = Forward(model, input, cfg_.threads);
  const std::size_t c = model.class_count();
  std::vector<double> scores(samples.size());
  ParallelFor(samples.size(), cfg_.threads, [&](std::size_t i) {
    const std::span<const double> row(logits.data() + i * c, c);
    scores[i] = scorer_ ? scorer_(row, samples[i].label) : ComputeMis(row, samples[i].label, mis_);
  });
  for (double s : scores) mis_sum_ += s;
  mis_count_ += static_cast<int64_t>(scores.size());
  if (observer_) {
    observer_->OnScore({samples.size(), before, state_.model.ParamChecksum(), optim_before,
                        VectorChecksum(state_.optim.velocity), scores});
  }
  return scores;
}

double Trainer::Update(const ExpandedBatch &batch, StepKind kind) {
  const Tensor input = NormalizeImages(batch.samples, cfg_.norm);
  const std::vector<int> labels = Labels(batch.samples);
  const LossAndGrad lg =
      LossAndGradient(state_.model, input, labels, cfg_.label_smoothing, cfg_.threads);
  const double lr = LrAt(state_.schedule, state_.global_iter);
  SgdStep(state_.model, state_.optim, lg.grad, lr);
  if (observer_) observer_->OnUpdate({kind, state_.global_iter, lr, batch.samples.size(), lg.loss});
  ++state_.global_iter;
  last_lr_ = lr;
  if (second_update_) {
    second_loss_sum_ += lg.loss;
    ++second_updates_;
  } else {
    first_loss_sum_ += lg.loss;
    ++first_updates_;
  }
  second_update_ = !second_update_;
  return lg.loss;
}

void Trainer::SraIteration(std::span<const LabeledImage> large_batch) {
  Expect(large_batch.size() % 2 == 0 && !large_batch.empty(),
         "sra_iteration: large batch must be nonempty and even");
  const std::size_t half = large_batch.size() / 2;
  const auto b1 = large_batch.first(half);
  const auto b2 = large_batch.subspan(half);

  Update(Explore(b1, 0), StepKind::kExplore);
  const std::vector<double> mis = Score(b2);
  Update(Refine(b2, mis, half), StepKind::kRefine);
  ++state_.batches;
}

void Trainer::AblationIteration(std::span<const LabeledImage> large_batch, TrainMode variant) {
  Expect(large_batch.size() % 2 == 0 && !large_batch.empty(),
         "ablation_iteration: large batch must be nonempty and even");
  const std::size_t half = large_batch.size() / 2;
  const auto b1 = large_batch.first(half);
  const auto b2 = large_batch.subspan(half);

  switch (variant) {
    case TrainMode::kNoExploreRandom: {
      Update(Raw(b1), StepKind::kRaw);
      const auto mis = Score(b2);
      Update(Refine(b2, mis, half), StepKind::kRefine);
      break;
    }
    case TrainMode::kAllExplore:
      Update(Explore(b1, 0), StepKind::kExplore);
      Update(Explore(b2, half), StepKind::kExplore);
      break;
    case TrainMode::kAllRefine: {
      const auto mis1 = Score(b1);
      Update(Refine(b1, mis1, 0), StepKind::kRefine);
      const auto mis2 = Score(b2);
      Update(Refine(b2, mis2, half), StepKind::kRefine);
      break;
    }
    case TrainMode::kOneBatch: {
      Update(Explore(large_batch, 0), StepKind::kExplore);
      const auto mis = Score(large_batch);
      Update(Refine(large_batch, mis, 0), StepKind::kRefine);
      break;
    }
    default:
      throw ContractViolation("ablation_iteration: not an ablation mode");
  }
  ++state_.batches;
}

void Trainer::BaselineIteration(std::span<const LabeledImage> large_batch) {
  Expect(large_batch.size() % 2 == 0 && !large_batch.empty(),
         "baseline_iteration: large batch must be nonempty and even");
  const std::size_t half = large_batch.size() / 2;
  const bool ra = cfg_.mode == TrainMode::kRaBaseline;
  for (std::size_t start : {std::size_t{0}, half}) {
    const auto part = large_batch.subspan(start, half);
    if (ra) {
      Update(Baseline(part, start), StepKind::kBaseline);
    } else {
      Update(Raw(part), StepKind::kRaw);
    }
  }
  ++state_.batches;
}

void Trainer::RunIteration(std::span<const LabeledImage> large_batch) {
  switch (cfg_.mode) {
    case TrainMode::kSra:
      SraIteration(large_batch);
      break;
    case TrainMode::kBasic:
    case TrainMode::kRaBaseline:
      BaselineIteration(large_batch);
      break;
    default:
      AblationIteration(large_batch, cfg_.mode);
      break;
  }
}

void Trainer::BeginEpoch(int epoch) {
  state_.epoch = epoch;
  first_loss_sum_ = second_loss_sum_ = mis_sum_ = 0.0;
  first_updates_ = second_updates_ = mis_count_ = 0;
  second_update_ = false;
}

MetricsRecord Trainer::EndEpoch() const {
  MetricsRecord r;
  r.epoch = state_.epoch;
  r.explore_loss = first_updates_ ? first_loss_sum_ / first_updates_ : 0.0;
  r.refine_loss = second_updates_ ? second_loss_sum_ / second_updates_ : 0.0;
  if (mis_count_ > 0) r.mean_mis = mis_sum_ / mis_count_;
  r.lr = last_lr_;
  return r;
}

double Evaluate(const Model &model, const Dataset &dataset, const NormConfig &norm,
                int threads) {
  if (dataset.samples.empty()) return 0.0;
  const Tensor input = NormalizeImages(dataset.samples, norm);
  const std::vector<double> logits = Forward(model, input, threads);
  const std::size_t c = model.class_count();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
    const double *row = logits.data() + i * c;
    std::size_t best = 0;
    for (std::size_t k = 1; k < c; ++k) {
      if (row[k] > row[best]) best = k;
    }
    if (static_cast<int>(best) == dataset.samples[i].label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(dataset.samples.size());
}

TrainResult Train(const TrainConfig &cfg, const Dataset &train_set, const Dataset &test_set,
                  const TrainOutputs &outputs, TrainObserver *observer) {
  cfg.Validate();
  train_set.Validate();
  if (!test_set.samples.empty() && test_set.class_count != train_set.class_count) {
    throw ConfigError("train and test sets disagree on class count (" +
                      std::to_string(train_set.class_count) + " vs " +
                      std::to_string(test_set.class_count) + ")");
  }
  if (train_set.samples.empty()) throw ConfigError("training set is empty");
  const int height = train_set.samples[0].image.height();
  const int width = train_set.samples[0].image.width();

  const std::size_t batch = static_cast<std::size_t>(cfg.large_batch_size);
  const std::size_t batches_per_epoch = train_set.size() / batch;
  if (cfg.epochs > 0 && batches_per_epoch == 0) {
    throw ConfigError("training set is smaller than one large batch");
  }
  Trainer trainer(cfg, train_set.class_count, height, width,
                  static_cast<int64_t>(2 * batches_per_epoch));
  trainer.set_observer(observer);

  std::ofstream metrics;
  if (!outputs.metrics_path.empty()) {
    metrics.open(outputs.metrics_path, std::ios::trunc);
    if (!metrics) throw ConfigError("cannot write metrics to " + outputs.metrics_path);
    metrics << kMetricsHeader << '\n' << std::flush;
  }

  TrainResult result;
  std::vector<std::size_t> order(train_set.size());
  std::vector<LabeledImage> large_batch(batch);
  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    trainer.BeginEpoch(epoch);
    std::iota(order.begin(), order.end(), 0);
    Stream shuffle = DeriveStream(cfg.seed, epoch, 0, 0, StreamPurpose::kShuffle);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[shuffle.UniformInt(i)]);
    }
    for (std::size_t b = 0; b < batches_per_epoch; ++b) {
      for (std::size_t k = 0; k < batch; ++k) large_batch[k] = train_set.samples[order[b * batch + k]];
      trainer.RunIteration(large_batch);
    }
    MetricsRecord record = trainer.EndEpoch();
    if (!test_set.samples.empty() && (epoch % cfg.eval_every == 0 || epoch == cfg.epochs)) {
      record.test_acc = Evaluate(trainer.state().model, test_set, cfg.norm, cfg.threads);
    }
    if (cfg.record_seconds) {
      record.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (metrics.is_open()) metrics << FormatMetricsRow(record) << '\n' << std::flush;
    result.history.push_back(record);
  }

  result.model = trainer.state().model;
  result.optim = trainer.state().optim;
  result.updates = trainer.state().global_iter;
  if (!outputs.checkpoint_path.empty()) {
    const auto bytes = SaveCheckpoint(result.model, result.optim);
    WriteFileBytes(outputs.checkpoint_path, bytes);
  }
  return result;
}

}  // namespace sra
