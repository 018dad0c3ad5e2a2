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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "oracles/recording_observer.h"
#include "sra/error.h"
#include "sra/trainer.h"

namespace sra {
namespace {

using testing::RecordingObserver;

TrainConfig SmallConfig(TrainMode mode) {
  TrainConfig cfg;
  cfg.mode = mode;
  cfg.epochs = 3;
  cfg.warmup_epochs = 1;
  cfg.large_batch_size = 8;
  cfg.arch = "conv3x3:4,relu,maxpool2,gap,linear";
  return cfg;
}

const Dataset &SmallTrain() {
  static const Dataset d = SynthesizeDataset(1, 4, 6, 8);
  return d;
}
const Dataset &SmallTest() {
  static const Dataset d = SynthesizeDataset(2, 4, 3, 8);
  return d;
}

std::vector<LabeledImage> FirstBatch(std::size_t n) {
  return {SmallTrain().samples.begin(), SmallTrain().samples.begin() + n};
}

std::string Slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(TrainConfigTest, Validation) {
  TrainConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  auto bad = [&](auto mutate) {
    TrainConfig c;
    mutate(c);
    EXPECT_THROW(c.Validate(), ConfigError);
  };
  bad([](TrainConfig &c) { c.large_batch_size = 7; });
  bad([](TrainConfig &c) { c.large_batch_size = 0; });
  bad([](TrainConfig &c) { c.repeat = 0; });
  bad([](TrainConfig &c) { c.epochs = -1; });
  bad([](TrainConfig &c) { c.warmup_epochs = 30; });
  bad([](TrainConfig &c) { c.momentum = 1.0; });
  bad([](TrainConfig &c) { c.label_smoothing = 1.0; });
  bad([](TrainConfig &c) { c.eval_every = 0; });
  bad([](TrainConfig &c) { c.threads = 0; });
  bad([](TrainConfig &c) { c.policy.depth = 0; });
  bad([](TrainConfig &c) { c.mis.epsilon = -1; });
  bad([](TrainConfig &c) { c.norm.std[1] = 0; });
}

TEST(TrainModeTest, NamesRoundTrip) {
  for (auto m : {TrainMode::kSra, TrainMode::kRaBaseline, TrainMode::kBasic,
                 TrainMode::kNoExploreRandom, TrainMode::kAllExplore, TrainMode::kAllRefine,
                 TrainMode::kOneBatch}) {
    EXPECT_EQ(ParseMode(ModeName(m)), m);
  }
  EXPECT_FALSE(ParseMode("ablation-everything").has_value());
}

TEST(SraIterationTest, StructurePerLargeBatch) {
  TrainConfig cfg = SmallConfig(TrainMode::kSra);
  Trainer trainer(cfg, 4, 8, 8, 6);
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  for (int it = 0; it < 10; ++it) {
    obs.Clear();
    const int64_t before = trainer.state().global_iter;
    trainer.SraIteration(FirstBatch(8));
    EXPECT_EQ(trainer.state().global_iter, before + 2);
    ASSERT_EQ(obs.updates.size(), 2u);
    EXPECT_EQ(obs.updates[0].kind, StepKind::kExplore);
    EXPECT_EQ(obs.updates[1].kind, StepKind::kRefine);
    for (int k = 0; k < 2; ++k) {
      EXPECT_EQ(obs.updates[k].global_iter, before + k);
      EXPECT_EQ(obs.updates[k].lr, LrAt(trainer.state().schedule, before + k));
      EXPECT_EQ(obs.updates[k].batch_size, 4u);
    }
    ASSERT_EQ(obs.scores.size(), 1u);
    EXPECT_EQ(obs.scores[0].samples, 4u);
    EXPECT_TRUE(obs.scores[0].params_unchanged);
    EXPECT_TRUE(obs.scores[0].optim_unchanged);
    // B1 is the first half, B2 the second, in order.
    ASSERT_EQ(obs.augments.size(), 2u);
    const auto batch = FirstBatch(8);
    for (int i = 0; i < 4; ++i) {
      EXPECT_EQ(obs.augments[0].source[i], batch[i]);
      EXPECT_EQ(obs.augments[1].source[i], batch[4 + i]);
      for (const auto &app : obs.augments[1].policies[i].apps) {
        EXPECT_EQ(app.magnitude, obs.scores[0].scores[i]);
      }
    }
  }
}

TEST(SraIterationTest, RejectsOddBatch) {
  Trainer trainer(SmallConfig(TrainMode::kSra), 4, 8, 8, 6);
  trainer.BeginEpoch(1);
  EXPECT_THROW(trainer.SraIteration(FirstBatch(7)), ContractViolation);
  EXPECT_THROW(trainer.SraIteration(FirstBatch(0)), ContractViolation);
}

TEST(SraIterationTest, IdentityPolicyFirstLossesAreLogC) {
  TrainConfig cfg = SmallConfig(TrainMode::kSra);
  cfg.policy.operator_subset = {OpKind::kIdentity};
  cfg.warmup_epochs = 1;
  Trainer trainer(cfg, 4, 8, 8, 6);
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  trainer.SraIteration(FirstBatch(8));
  ASSERT_EQ(obs.updates.size(), 2u);
  EXPECT_NEAR(obs.updates[0].loss, std::log(4.0), 1e-3);
  EXPECT_NEAR(obs.updates[1].loss, std::log(4.0), 1e-3);
  // Warmup starts at lr 0, so the first step leaves the zero head untouched.
  EXPECT_EQ(obs.updates[0].lr, 0.0);
}

TEST(SraIterationTest, ZeroMisKeepsRefineInputsRaw) {
  TrainConfig cfg = SmallConfig(TrainMode::kSra);
  cfg.policy.operator_subset.clear();
  for (OpKind k : kAllOpKinds) {
    if (k != OpKind::kEqualize && k != OpKind::kAutoContrast) cfg.policy.operator_subset.push_back(k);
  }
  Trainer trainer(cfg, 4, 8, 8, 6);
  trainer.set_scorer([](std::span<const double>, int) { return 0.0; });
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  for (int it = 0; it < 5; ++it) trainer.SraIteration(FirstBatch(8));
  int refines = 0;
  for (const auto &a : obs.augments) {
    if (a.kind != StepKind::kRefine) continue;
    ++refines;
    EXPECT_EQ(a.augmented, a.source);
  }
  EXPECT_EQ(refines, 5);
}

TEST(SraIterationTest, ZeroMisWithHistogramOpsStillDiffersOnlyThere) {
  Trainer trainer(SmallConfig(TrainMode::kSra), 4, 8, 8, 6);
  trainer.set_scorer([](std::span<const double>, int) { return 0.0; });
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  for (int it = 0; it < 5; ++it) trainer.SraIteration(FirstBatch(8));
  for (const auto &a : obs.augments) {
    if (a.kind != StepKind::kRefine) continue;
    for (std::size_t i = 0; i < a.source.size(); ++i) {
      bool histogram = false;
      for (const auto &app : a.policies[i].apps) {
        histogram |= app.kind == OpKind::kEqualize || app.kind == OpKind::kAutoContrast;
      }
      if (!histogram) {
        EXPECT_EQ(a.augmented[i], a.source[i]);
      }
    }
  }
}

TEST(AblationTest, AllExploreNeverScores) {
  Trainer trainer(SmallConfig(TrainMode::kAllExplore), 4, 8, 8, 6);
  int calls = 0;
  trainer.set_scorer([&](std::span<const double>, int) { return ++calls, 0.5; });
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  for (int it = 0; it < 3; ++it) trainer.RunIteration(FirstBatch(8));
  EXPECT_EQ(calls, 0);
  EXPECT_TRUE(obs.scores.empty());
  EXPECT_EQ(obs.updates.size(), 6u);
  for (const auto &u : obs.updates) EXPECT_EQ(u.kind, StepKind::kExplore);
  EXPECT_FALSE(trainer.EndEpoch().mean_mis.has_value());
}

TEST(AblationTest, AllRefineScoresEverySampleOnce) {
  Trainer trainer(SmallConfig(TrainMode::kAllRefine), 4, 8, 8, 6);
  int calls = 0;
  trainer.set_scorer([&](std::span<const double>, int) { return ++calls, 0.5; });
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  trainer.RunIteration(FirstBatch(8));
  EXPECT_EQ(calls, 8);
  ASSERT_EQ(obs.scores.size(), 2u);
  for (const auto &s : obs.scores) EXPECT_TRUE(s.params_unchanged);
  EXPECT_EQ(trainer.state().global_iter, 2);
}

TEST(AblationTest, OneBatchUsesWholeBatchTwice) {
  Trainer trainer(SmallConfig(TrainMode::kOneBatch), 4, 8, 8, 6);
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  trainer.RunIteration(FirstBatch(8));
  EXPECT_EQ(trainer.state().global_iter, 2);
  ASSERT_EQ(obs.updates.size(), 2u);
  EXPECT_EQ(obs.updates[0].batch_size, 8u);
  EXPECT_EQ(obs.updates[1].batch_size, 8u);
  ASSERT_EQ(obs.scores.size(), 1u);
  EXPECT_EQ(obs.scores[0].samples, 8u);
}

TEST(AblationTest, NoExploreRandomTrainsRawFirstHalf) {
  Trainer trainer(SmallConfig(TrainMode::kNoExploreRandom), 4, 8, 8, 6);
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  trainer.RunIteration(FirstBatch(8));
  ASSERT_EQ(obs.augments.size(), 2u);
  EXPECT_EQ(obs.augments[0].kind, StepKind::kRaw);
  EXPECT_EQ(obs.augments[0].augmented, obs.augments[0].source);
  EXPECT_EQ(obs.augments[1].kind, StepKind::kRefine);
  EXPECT_EQ(obs.scores.size(), 1u);
}

TEST(AblationTest, RejectsNonAblationVariant) {
  Trainer trainer(SmallConfig(TrainMode::kSra), 4, 8, 8, 6);
  EXPECT_THROW(trainer.AblationIteration(FirstBatch(8), TrainMode::kSra), ContractViolation);
}

TEST(BaselineTest, BasicTrainsRawHalvesTwice) {
  Trainer trainer(SmallConfig(TrainMode::kBasic), 4, 8, 8, 6);
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  trainer.RunIteration(FirstBatch(8));
  EXPECT_EQ(trainer.state().global_iter, 2);
  ASSERT_EQ(obs.augments.size(), 2u);
  for (const auto &a : obs.augments) EXPECT_EQ(a.augmented, a.source);
  EXPECT_TRUE(obs.scores.empty());
}

TEST(BaselineTest, RaUsesConfiguredMagnitude) {
  TrainConfig cfg = SmallConfig(TrainMode::kRaBaseline);
  cfg.ra.magnitude_level = 15;
  Trainer trainer(cfg, 4, 8, 8, 6);
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  trainer.RunIteration(FirstBatch(8));
  ASSERT_EQ(obs.augments.size(), 2u);
  for (const auto &a : obs.augments) {
    EXPECT_EQ(a.kind, StepKind::kBaseline);
    for (const auto &p : a.policies) {
      ASSERT_EQ(p.apps.size(), 2u);
      for (const auto &app : p.apps) EXPECT_DOUBLE_EQ(app.magnitude, 0.5);
    }
  }
}

TEST(BasicModeTest, MatchesPlainSgdReference) {
  TrainConfig cfg = SmallConfig(TrainMode::kBasic);
  cfg.policy.operator_subset = {OpKind::kIdentity};
  cfg.eval_every = 100;
  const TrainResult result = Train(cfg, SmallTrain(), Dataset{});

  // Reference loop: same init, same shuffles, plain SGD on the raw halves.
  Model model(8, 8, cfg.arch, 4);
  Stream init = DeriveStream(cfg.seed, 0, 0, 0, StreamPurpose::kInit);
  model.InitializeHe(init);
  OptimState opt{cfg.base_lr, cfg.momentum, cfg.weight_decay, 0.0,
                 std::vector<double>(model.param_count(), 0.0)};
  const std::size_t n = SmallTrain().size();
  const int64_t per_epoch = 2 * static_cast<int64_t>(n / 8);
  LrSchedule sched{cfg.warmup_epochs, cfg.epochs, per_epoch, cfg.base_lr};
  int64_t iter = 0;
  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Stream shuffle = DeriveStream(cfg.seed, epoch, 0, 0, StreamPurpose::kShuffle);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[shuffle.UniformInt(i)]);
    for (std::size_t start = 0; start + 4 <= (n / 8) * 8; start += 4) {
      std::vector<LabeledImage> half;
      std::vector<int> labels;
      for (std::size_t k = 0; k < 4; ++k) {
        half.push_back(SmallTrain().samples[order[start + k]]);
        labels.push_back(half.back().label);
      }
      const auto lg = LossAndGradient(model, NormalizeImages(half, cfg.norm), labels, 0.0);
      SgdStep(model, opt, lg.grad, LrAt(sched, iter++));
    }
  }
  EXPECT_EQ(result.updates, iter);
  EXPECT_EQ(result.model, model);
}

TEST(BatchAugmentTest, RepeatOneIsPlainPass) {
  const auto batch = FirstBatch(6);
  const auto out = BatchAugmentExpand(
      batch, 1, [](std::size_t i, int) { return Stream(i); },
      [](std::size_t, Stream &) { return SubPolicy{}; });
  EXPECT_EQ(out.samples, batch);
}

TEST(BatchAugmentTest, EightCopiesOfSixteen) {
  const Dataset d = SynthesizeDataset(5, 4, 4, 8);
  const std::vector<LabeledImage> batch = d.samples;
  ASSERT_EQ(batch.size(), 16u);
  PolicyConfig policy;
  const auto out = BatchAugmentExpand(
      batch, 8,
      [](std::size_t i, int copy) { return DeriveStream(0, 1, 0, i * 8 + copy, StreamPurpose::kRefine); },
      [&](std::size_t i, Stream &rng) { return SampleRefine(policy, 0.1 * (i % 10), rng); });
  ASSERT_EQ(out.samples.size(), 128u);
  for (std::size_t i = 0; i < 16; ++i) {
    std::set<std::vector<std::pair<int, int>>> kinds;
    for (int k = 0; k < 8; ++k) {
      const std::size_t slot = i * 8 + k;
      EXPECT_EQ(out.samples[slot].label, batch[i].label);
      std::vector<std::pair<int, int>> sig;
      for (const auto &app : out.policies[slot].apps) {
        EXPECT_EQ(app.magnitude, 0.1 * (i % 10));
        sig.emplace_back(static_cast<int>(app.kind), app.sign);
      }
      kinds.insert(sig);
    }
    EXPECT_GT(kinds.size(), 1u) << "sample " << i;
  }
}

TEST(BatchAugmentTest, CopiesAreDistinctUnderFullOperatorSet) {
  PolicyConfig policy;
  const auto batch = FirstBatch(8);
  int pairs = 0, distinct = 0;
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const auto out = BatchAugmentExpand(
        batch, 4,
        [&](std::size_t i, int copy) { return DeriveStream(seed, 0, 0, i * 4 + copy, StreamPurpose::kExplore); },
        [&](std::size_t, Stream &rng) { return SampleExplore(policy, rng); });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          ++pairs;
          distinct += out.policies[i * 4 + a] != out.policies[i * 4 + b];
        }
      }
    }
  }
  EXPECT_GT(static_cast<double>(distinct) / pairs, 0.99);
}

TEST(BatchAugmentTest, TrainerSharesMisAcrossCopies) {
  TrainConfig cfg = SmallConfig(TrainMode::kSra);
  cfg.repeat = 8;
  Trainer trainer(cfg, 4, 8, 8, 6);
  RecordingObserver obs;
  trainer.set_observer(&obs);
  trainer.BeginEpoch(1);
  trainer.SraIteration(FirstBatch(8));
  ASSERT_EQ(obs.updates.size(), 2u);
  EXPECT_EQ(obs.updates[0].batch_size, 32u);
  EXPECT_EQ(obs.updates[1].batch_size, 32u);
  ASSERT_EQ(obs.scores.size(), 1u);
  EXPECT_EQ(obs.scores[0].samples, 4u);
  const auto &refine = obs.augments[1];
  ASSERT_EQ(refine.augmented.size(), 32u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (int k = 0; k < 8; ++k) {
      EXPECT_EQ(refine.augmented[i * 8 + k].label, refine.source[i].label);
      for (const auto &app : refine.policies[i * 8 + k].apps) {
        EXPECT_EQ(app.magnitude, obs.scores[0].scores[i]);
      }
    }
  }
}

TEST(TrainTest, EpochCountsAndUpdates) {
  TrainConfig cfg = SmallConfig(TrainMode::kSra);
  const TrainResult r = Train(cfg, SmallTrain(), SmallTest());
  // 24 samples, large batch 8: 3 large batches, 6 updates per epoch.
  EXPECT_EQ(r.updates, 2 * 3 * 3);
  ASSERT_EQ(r.history.size(), 3u);
  for (int e = 0; e < 3; ++e) {
    EXPECT_EQ(r.history[e].epoch, e + 1);
    ASSERT_TRUE(r.history[e].mean_mis.has_value());
    EXPECT_GE(*r.history[e].mean_mis, 0.0);
    EXPECT_LE(*r.history[e].mean_mis, 1.0);
    EXPECT_TRUE(r.history[e].test_acc.has_value());
    EXPECT_FALSE(r.history[e].seconds.has_value());
  }
  EXPECT_EQ(r.history.back().lr, 0.0);
}

TEST(TrainTest, DropsPartialBatches) {
  TrainConfig cfg = SmallConfig(TrainMode::kSra);
  cfg.large_batch_size = 10;  // 24 samples: two batches, 4 dropped
  RecordingObserver obs;
  obs.keep_images = false;
  const TrainResult r = Train(cfg, SmallTrain(), SmallTest(), {}, &obs);
  EXPECT_EQ(r.updates, 3 * 2 * 2);
  for (const auto &u : obs.updates) EXPECT_EQ(u.batch_size, 5u);
}

TEST(TrainTest, EvalEverySkipsEpochsButKeepsLast) {
  TrainConfig cfg = SmallConfig(TrainMode::kBasic);
  cfg.epochs = 5;
  cfg.eval_every = 2;
  const TrainResult r = Train(cfg, SmallTrain(), SmallTest());
  const std::vector<bool> want = {false, true, false, true, true};
  for (int e = 0; e < 5; ++e) EXPECT_EQ(r.history[e].test_acc.has_value(), want[e]) << e;
  EXPECT_FALSE(r.history[0].mean_mis.has_value());
}

TEST(TrainTest, ZeroEpochsWritesInitialCheckpointAndEmptyMetrics) {
  const auto dir = std::filesystem::temp_directory_path() / "sra_trainer_zero";
  std::filesystem::create_directories(dir);
  TrainConfig cfg = SmallConfig(TrainMode::kSra);
  cfg.epochs = 0;
  cfg.warmup_epochs = 0;
  const TrainOutputs out{(dir / "m.csv").string(), (dir / "c.ckpt").string()};
  const TrainResult r = Train(cfg, SmallTrain(), SmallTest(), out);
  EXPECT_EQ(r.updates, 0);
  EXPECT_TRUE(r.history.empty());
  EXPECT_EQ(Slurp(out.metrics_path), std::string(kMetricsHeader) + "\n");
  const Checkpoint ck = LoadCheckpoint(ReadFileBytes(out.checkpoint_path));
  Trainer fresh(cfg, 4, 8, 8, 1);
  EXPECT_EQ(ck.model.descriptor(), fresh.state().model.descriptor());
  for (std::size_t i = 0; i < ck.model.param_count(); ++i) {
    EXPECT_EQ(ck.model.params()[i],
              static_cast<double>(static_cast<float>(fresh.state().model.params()[i])));
  }
  std::filesystem::remove_all(dir);
}

TEST(TrainTest, DeterministicAcrossRunsAndThreads) {
  const auto dir = std::filesystem::temp_directory_path() / "sra_trainer_det";
  std::filesystem::create_directories(dir);
  auto run = [&](int threads, const std::string &tag) {
    TrainConfig cfg = SmallConfig(TrainMode::kSra);
    cfg.threads = threads;
    cfg.repeat = 2;
    const TrainOutputs out{(dir / (tag + ".csv")).string(), (dir / (tag + ".ckpt")).string()};
    Train(cfg, SmallTrain(), SmallTest(), out);
    return Slurp(out.metrics_path) + Slurp(out.checkpoint_path);
  };
  const std::string a = run(1, "a");
  EXPECT_EQ(a, run(1, "b"));
  EXPECT_EQ(a, run(3, "c"));
  std::filesystem::remove_all(dir);
}

TEST(TrainTest, RejectsMismatchedClassCounts) {
  Dataset test = SmallTest();
  test.class_count = 5;
  EXPECT_THROW(Train(SmallConfig(TrainMode::kSra), SmallTrain(), test), ConfigError);
}

TEST(TrainTest, RejectsTooSmallTrainingSet) {
  TrainConfig cfg = SmallConfig(TrainMode::kSra);
  cfg.large_batch_size = 64;
  EXPECT_THROW(Train(cfg, SmallTrain(), SmallTest()), ConfigError);
}

TEST(MetricsTest, RowFormatting) {
  MetricsRecord r;
  r.epoch = 3;
  r.explore_loss = 1.5;
  r.refine_loss = 0.25;
  r.lr = 0.01;
  EXPECT_EQ(FormatMetricsRow(r), "3,1.50000000,0.25000000,,0.01,,");
  r.mean_mis = 0.5;
  r.test_acc = 0.75;
  r.seconds = 2.0;
  const std::string row = FormatMetricsRow(r);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 6);
  EXPECT_NE(row.find("0.750000"), std::string::npos);
}

Model ConstantBiasModel(int favored) {
  Model m("1x1x3>linear:3");
  std::fill(m.params().begin(), m.params().end(), 0.0);
  if (favored >= 0) m.params()[9 + favored] = 1.0;
  return m;
}

Dataset TinySet(std::vector<int> labels) {
  Dataset d;
  d.class_count = 3;
  for (int y : labels) d.samples.push_back({Image(1, 1, 100), y});
  return d;
}

TEST(EvaluateTest, TiesGoToLowestIndex) {
  EXPECT_DOUBLE_EQ(Evaluate(ConstantBiasModel(-1), TinySet({0, 1, 2, 0}), NormConfig{}), 0.5);
}

TEST(EvaluateTest, PerfectAndPermutationInvariant) {
  EXPECT_DOUBLE_EQ(Evaluate(ConstantBiasModel(2), TinySet({2, 2, 2}), NormConfig{}), 1.0);
  const double a = Evaluate(ConstantBiasModel(1), TinySet({1, 0, 1, 2, 1}), NormConfig{});
  const double b = Evaluate(ConstantBiasModel(1), TinySet({2, 1, 1, 0, 1}), NormConfig{});
  EXPECT_DOUBLE_EQ(a, 0.6);
  EXPECT_EQ(a, b);
  EXPECT_EQ(Evaluate(ConstantBiasModel(1), Dataset{}, NormConfig{}), 0.0);
}

}  // namespace
}  // namespace sra
