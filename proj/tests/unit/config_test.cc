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

#include <string>

#include "sra/config.h"
#include "sra/error.h"

namespace sra {
namespace {

std::string ErrorOf(const std::string &text,
                    const std::vector<std::pair<std::string, std::string>> &flags = {}) {
  try {
    ParseConfig(text, flags);
  } catch (const ConfigError &e) {
    return e.what();
  }
  return "";
}

TEST(ParseConfigTest, EmptyTextGivesDefaults) {
  const RunConfig cfg = ParseConfig("");
  EXPECT_EQ(cfg, RunConfig{});
  EXPECT_EQ(cfg.train.large_batch_size, 128);
  EXPECT_EQ(cfg.train.epochs, 30);
  EXPECT_EQ(cfg.train.policy.depth, 2);
  EXPECT_EQ(cfg.train.mis.epsilon, 2.0);
  EXPECT_EQ(ParseConfig("# only a comment\n\n   \n"), RunConfig{});
}

TEST(ParseConfigTest, FlagsOverrideFile) {
  const RunConfig cfg = ParseConfig("mis.epsilon = 2\n", {{"mis.epsilon", "4"}});
  EXPECT_EQ(cfg.train.mis.epsilon, 4.0);
  EXPECT_EQ(ParseConfig("mis.epsilon = 3").train.mis.epsilon, 3.0);
}

TEST(ParseConfigTest, ReadsEveryKind) {
  const RunConfig cfg = ParseConfig(
      "seed = 17\n"
      "trainer.mode = ablation-one_batch  # trailing comment\n"
      "policy.ops = Rotate, solarize\n"
      "policy.fill = 1,2,3\n"
      "model.norm_std = 0.25,0.5,1\n"
      "trainer.record_seconds = true\n"
      "data.source = cifar10:/tmp/x\n");
  EXPECT_EQ(cfg.train.seed, 17u);
  EXPECT_EQ(cfg.train.mode, TrainMode::kOneBatch);
  EXPECT_EQ(cfg.train.policy.operator_subset,
            (std::vector<OpKind>{OpKind::kRotate, OpKind::kSolarize}));
  EXPECT_EQ(cfg.train.policy.fill, (Rgb{1, 2, 3}));
  EXPECT_EQ(cfg.train.norm.std[0], 0.25);
  EXPECT_TRUE(cfg.train.record_seconds);
  EXPECT_EQ(cfg.data.source, "cifar10:/tmp/x");
}

TEST(ParseConfigTest, DepthZeroCitesBound) {
  const std::string e = ErrorOf("policy.depth = 0");
  EXPECT_NE(e.find("policy.depth"), std::string::npos) << e;
  EXPECT_NE(e.find(">= 1"), std::string::npos) << e;
  EXPECT_NE(e.find("line 1"), std::string::npos) << e;
}

TEST(ParseConfigTest, ErrorsNameKeyAndLocation) {
  EXPECT_NE(ErrorOf("\n\nnot.a.key = 1").find("line 3"), std::string::npos);
  EXPECT_NE(ErrorOf("\n\nnot.a.key = 1").find("not.a.key"), std::string::npos);
  EXPECT_NE(ErrorOf("trainer.epochs").find("key = value"), std::string::npos);
  EXPECT_NE(ErrorOf("", {{"trainer.repeat", "0"}}).find("flag --trainer.repeat"), std::string::npos);
  EXPECT_FALSE(ErrorOf("trainer.large_batch_size = 9").empty());
  EXPECT_FALSE(ErrorOf("trainer.epochs = ten").empty());
  EXPECT_FALSE(ErrorOf("mis.epsilon = -1").empty());
  EXPECT_FALSE(ErrorOf("mis.epsilon = nan").empty());
  EXPECT_FALSE(ErrorOf("optim.momentum = 1").empty());
  EXPECT_FALSE(ErrorOf("policy.ops = Cutout").empty());
  EXPECT_FALSE(ErrorOf("policy.fill = 1,2,300").empty());
  EXPECT_FALSE(ErrorOf("seed = -3").empty());
  EXPECT_FALSE(ErrorOf("trainer.mode = fast").empty());
  EXPECT_FALSE(ErrorOf("data.source = imagenet").empty());
  // Cross-key checks run after every layer is applied.
  EXPECT_FALSE(ErrorOf("trainer.epochs = 2\noptim.warmup_epochs = 2").empty());
}

TEST(DumpConfigTest, RoundTripsDefaultsAndEdits) {
  EXPECT_EQ(ParseConfig(DumpConfig(RunConfig{})), RunConfig{});
  const RunConfig edited = ParseConfig(
      "seed = 18446744073709551615\n"
      "optim.base_lr = 0.1\n"
      "optim.weight_decay = 0.000123456789\n"
      "model.norm_mean = 0.4914,0.4822,0.4465\n"
      "policy.ops = Identity,Equalize\n"
      "mis.scorer = jaccard\n"
      "ra.magnitude_std = 0.5\n"
      "data.train_limit = 5000\n");
  EXPECT_EQ(ParseConfig(DumpConfig(edited)), edited);
}

TEST(ConfigKeysTest, EveryKeyDocumentedAndDumped) {
  const std::string dump = DumpConfig(RunConfig{});
  for (const auto &k : ConfigKeys()) {
    EXPECT_FALSE(k.doc.empty()) << k.key;
    EXPECT_NE(dump.find(k.key + " = " + k.default_value + "\n"), std::string::npos) << k.key;
  }
  EXPECT_GE(ConfigKeys().size(), 30u);
}

TEST(LoadDatasetsTest, SyntheticDefaults) {
  const auto [train, test] = LoadDatasets(DataConfig{}, 0);
  EXPECT_EQ(train.size(), 200u);
  EXPECT_EQ(test.size(), 100u);
  EXPECT_EQ(train.class_count, 4);
  EXPECT_NE(train.samples[0].image, test.samples[0].image);
  DataConfig limited;
  limited.train_limit = 13;
  EXPECT_EQ(LoadDatasets(limited, 0).first.size(), 13u);
}

TEST(LoadDatasetsTest, MissingCifarDirectory) {
  DataConfig d;
  d.source = "cifar10:/nonexistent/dir";
  EXPECT_ANY_THROW(LoadDatasets(d, 0));
}

}  // namespace
}  // namespace sra
