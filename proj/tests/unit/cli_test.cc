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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/test_images.h"
#include "sra/commands.h"
#include "sra/config.h"
#include "sra/image.h"

namespace sra {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int Lines(const std::string &s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sra_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string &name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, TrainWritesOneRowPerEpoch) {
  const Result r = Invoke({"train", "--out", Path("run"), "--trainer.epochs", "3",
                        "--optim.warmup_epochs=1", "--data.image_size", "8",
                        "--trainer.large_batch_size", "32"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string metrics = Slurp(Path("run/metrics.csv"));
  EXPECT_EQ(metrics.rfind("epoch,explore_loss,refine_loss,mean_mis,lr,test_acc,seconds\n", 0), 0u);
  EXPECT_EQ(Lines(metrics), 4);
  EXPECT_TRUE(fs::exists(Path("run/model.ckpt")));
  const RunConfig saved = ParseConfig(Slurp(Path("run/config.txt")));
  EXPECT_EQ(saved.train.epochs, 3);
  EXPECT_NE(r.err.find("epoch 3/3"), std::string::npos);
}

TEST_F(CliTest, TrainDefaultsGiveThirtyRows) {
  const Result r = Invoke({"train", "--out", Path("run"), "--quiet", "--data.image_size", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Lines(Slurp(Path("run/metrics.csv"))), 31);
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, DumpConfigRoundTrips) {
  std::ofstream(Path("cfg.txt")) << "mis.epsilon = 3\npolicy.depth = 3\n";
  const Result r = Invoke({"train", "--config", Path("cfg.txt"), "--dump-config", "--seed", "9",
                        "--policy.depth", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const RunConfig cfg = ParseConfig(r.out);
  EXPECT_EQ(cfg.train.mis.epsilon, 3.0);
  EXPECT_EQ(cfg.train.policy.depth, 4);
  EXPECT_EQ(cfg.train.seed, 9u);
  EXPECT_EQ(DumpConfig(cfg), r.out);
}

TEST_F(CliTest, TrainErrors) {
  Result r = Invoke({"train", "--dump-config", "--policy.depth", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("policy.depth"), std::string::npos);
  EXPECT_EQ(Lines(r.err), 1);
  EXPECT_TRUE(r.out.empty());

  r = Invoke({"train", "--config", Path("missing.txt"), "--out", Path("x")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u);

  r = Invoke({"train"});
  EXPECT_EQ(r.code, 1);
  r = Invoke({"train", "--out", Path("x"), "--trainer.epochs"});
  EXPECT_EQ(r.code, 1);
  r = Invoke({"frobnicate"});
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, AugmentRefineZeroIsNeutral) {
  fs::create_directories(Path("in"));
  for (int i = 0; i < 5; ++i) {
    const Image img = testing::NoiseImage(i, 12, 10);
    WriteFileBytes(Path("in/img" + std::to_string(i) + ".ppm"), SavePpm(img));
  }
  std::ofstream(Path("in/notes.txt")) << "skip me";
  const Result r = Invoke({"augment", "--in", Path("in"), "--out", Path("out"), "--mode", "refine",
                        "--magnitude", "0", "--depth", "2", "--ops",
                        "ShearX,ShearY,TranslateX,TranslateY,Rotate,Brightness,Color,Sharpness,"
                        "Contrast,Solarize,Posterize,Identity"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (int i = 0; i < 5; ++i) {
    const std::string name = "img" + std::to_string(i) + ".ppm";
    EXPECT_EQ(Slurp(Path("out/" + name)), Slurp(Path("in/" + name)));
  }
  EXPECT_FALSE(fs::exists(Path("out/notes.txt")));
}

TEST_F(CliTest, AugmentExploreIsSeededAndChangesImages) {
  fs::create_directories(Path("in"));
  WriteFileBytes(Path("in/a.ppm"), SavePpm(testing::NoiseImage(1, 16, 16)));
  for (const char *out : {"o1", "o2"}) {
    ASSERT_EQ(Invoke({"augment", "--in", Path("in"), "--out", Path(out), "--mode", "explore",
                   "--seed", "4", "--ops", "Rotate"})
                  .code,
              0);
  }
  EXPECT_EQ(Slurp(Path("o1/a.ppm")), Slurp(Path("o2/a.ppm")));
  EXPECT_NE(Slurp(Path("o1/a.ppm")), Slurp(Path("in/a.ppm")));
  const Result ra = Invoke({"augment", "--in", Path("in"), "--out", Path("o3"), "--mode", "ra",
                         "--magnitude", "9", "--magnitude-std", "0.5"});
  EXPECT_EQ(ra.code, 0) << ra.err;
}

TEST_F(CliTest, AugmentErrors) {
  fs::create_directories(Path("in"));
  std::ofstream(Path("in/bad.ppm")) << "P3\n1 1\n255\n0 0 0\n";
  Result r = Invoke({"augment", "--in", Path("in"), "--out", Path("out")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  r = Invoke({"augment", "--in", Path("nowhere"), "--out", Path("out")});
  EXPECT_EQ(r.code, 1);
  r = Invoke({"augment", "--in", Path("in"), "--out", Path("out"), "--mode", "wild"});
  EXPECT_EQ(r.code, 1);
  r = Invoke({"augment", "--in", Path("in"), "--out", Path("out"), "--mode", "refine",
           "--magnitude", "2"});
  EXPECT_EQ(r.code, 1);
  r = Invoke({"augment", "--out", Path("out")});
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, ScoreProducesOneRowPerSample) {
  ASSERT_EQ(Invoke({"train", "--out", Path("run"), "--quiet", "--trainer.epochs", "2",
                 "--optim.warmup_epochs", "1", "--data.image_size", "8",
                 "--trainer.large_batch_size", "64"})
                .code,
            0);
  std::ofstream(Path("data.txt")) << "data.image_size = 8\n";
  const Result r = Invoke({"score", "--checkpoint", Path("run/model.ckpt"), "--data", "synthetic",
                        "--config", Path("data.txt"), "--epsilon", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("sample_index,label,target_prob,mis\n", 0), 0u);
  EXPECT_EQ(Lines(r.out), 101);

  const Result j = Invoke({"score", "--checkpoint", Path("run/model.ckpt"), "--data", "synthetic",
                        "--config", Path("data.txt"), "--scorer", "jaccard", "--split", "train",
                        "--out", Path("s.csv")});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(Lines(Slurp(Path("s.csv"))), 201);
}

TEST_F(CliTest, ScoreErrors) {
  Result r = Invoke({"score", "--checkpoint", Path("none.ckpt"), "--data", "synthetic"});
  EXPECT_EQ(r.code, 1);
  std::ofstream(Path("junk.ckpt")) << "not a checkpoint";
  r = Invoke({"score", "--checkpoint", Path("junk.ckpt"), "--data", "synthetic"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("checkpoint"), std::string::npos);
  // 32x32 data against an 8x8 model.
  ASSERT_EQ(Invoke({"train", "--out", Path("run"), "--quiet", "--trainer.epochs", "0",
                 "--optim.warmup_epochs", "0", "--data.image_size", "8"})
                .code,
            0);
  r = Invoke({"score", "--checkpoint", Path("run/model.ckpt"), "--data", "synthetic"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Lines(r.err), 1);
}

TEST_F(CliTest, BenchCsv) {
  const Result r = Invoke({"bench", "--size", "8", "--iters", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("op,images_per_sec,img_size,iters\n", 0), 0u);
  EXPECT_EQ(Lines(r.out), 15);
  EXPECT_NE(r.out.find("\nAutoContrast,"), std::string::npos);
  EXPECT_EQ(Invoke({"bench", "--size", "2"}).code, 1);
}

TEST_F(CliTest, HelpExitsZero) {
  const Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("train"), std::string::npos);
}

}  // namespace
}  // namespace sra
