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

#include "sra/commands.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sra/augment_ops.h"
#include "sra/config.h"
#include "sra/error.h"
#include "sra/image.h"
#include "sra/mis.h"
#include "sra/model.h"
#include "sra/policy.h"
#include "sra/trainer.h"

namespace sra {
namespace {

namespace fs = std::filesystem;

// Keeps benchmarked results observable.
volatile std::size_t sink = 0;

// "--key value" / "--key=value" pairs left over after the known flags.
std::vector<std::pair<std::string, std::string>> KeyValueFlags(
    const std::vector<std::string> &extras) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string &a = extras[i];
    if (a.rfind("--", 0) != 0 || a.size() <= 2) {
      throw ConfigError("unexpected argument '" + a + "'");
    }
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      out.emplace_back(a.substr(2, eq - 2), a.substr(eq + 1));
    } else {
      if (i + 1 >= extras.size()) throw ConfigError("flag " + a + " needs a value");
      out.emplace_back(a.substr(2), extras[++i]);
    }
  }
  return out;
}

std::string ReadText(const std::string &path) {
  const auto bytes = ReadFileBytes(path);
  return std::string(bytes.begin(), bytes.end());
}

struct TrainArgs {
  std::string config_path;
  std::string out_dir;
  std::string seed;
  int threads = 0;
  bool dump_config = false;
  bool quiet = false;
};

int CmdTrain(const TrainArgs &args, const std::vector<std::string> &extras, std::ostream &out,
             std::ostream &err) {
  auto overrides = KeyValueFlags(extras);
  if (!args.seed.empty()) overrides.emplace_back("seed", args.seed);
  if (args.threads > 0) overrides.emplace_back("trainer.threads", std::to_string(args.threads));
  const std::string text = args.config_path.empty() ? "" : ReadText(args.config_path);
  const RunConfig cfg = ParseConfig(text, overrides);
  if (args.dump_config) {
    out << DumpConfig(cfg);
    return 0;
  }
  if (args.out_dir.empty()) throw ConfigError("train: --out DIR is required");
  fs::create_directories(args.out_dir);
  const auto [train_set, test_set] = LoadDatasets(cfg.data, cfg.train.seed);
  const TrainOutputs outputs{(fs::path(args.out_dir) / "metrics.csv").string(),
                             (fs::path(args.out_dir) / "model.ckpt").string()};
  WriteFileBytes((fs::path(args.out_dir) / "config.txt").string(),
                 [&] {
                   const std::string dump = DumpConfig(cfg);
                   return std::vector<uint8_t>(dump.begin(), dump.end());
                 }());
  const TrainResult result = Train(cfg.train, train_set, test_set, outputs);
  if (!args.quiet) {
    for (const auto &r : result.history) {
      err << "epoch " << r.epoch << "/" << cfg.train.epochs << " explore_loss " << r.explore_loss
          << " refine_loss " << r.refine_loss;
      if (r.mean_mis) err << " mean_mis " << *r.mean_mis;
      if (r.test_acc) err << " test_acc " << *r.test_acc;
      err << "\n";
    }
  }
  return 0;
}

struct AugmentArgs {
  std::string in_dir;
  std::string out_dir;
  std::string mode = "explore";
  double magnitude = 0.0;
  double magnitude_std = 0.0;
  int depth = 2;
  uint64_t seed = 0;
  std::string ops = "all";
};

std::vector<OpKind> ParseOps(const std::string &spec) {
  const RunConfig cfg = ParseConfig("", {{"policy.ops", spec}});
  return cfg.train.policy.operator_subset;
}

int CmdAugment(const AugmentArgs &args, std::ostream &err) {
  if (!fs::is_directory(args.in_dir)) throw MalformedInput("no such directory: " + args.in_dir);
  PolicyConfig policy;
  policy.depth = args.depth;
  policy.operator_subset = ParseOps(args.ops);
  policy.Validate();
  if (args.mode == "refine" && (args.magnitude < 0.0 || args.magnitude > 1.0)) {
    throw ConfigError("augment: refine --magnitude must lie in [0, 1]");
  }
  RaBaselineConfig ra{args.depth, args.magnitude, args.magnitude_std};
  if (args.mode == "ra") ra.Validate();
  if (args.mode != "explore" && args.mode != "refine" && args.mode != "ra") {
    throw ConfigError("augment: --mode must be explore, refine or ra");
  }

  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(args.in_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ppm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  fs::create_directories(args.out_dir);
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Image img = LoadPpm(ReadFileBytes(files[i].string()));
    Stream rng = DeriveStream(args.seed, 0, 0, i, StreamPurpose::kAugmentTool);
    SubPolicy sub;
    if (args.mode == "explore") {
      sub = SampleExplore(policy, rng);
    } else if (args.mode == "refine") {
      sub = SampleRefine(policy, args.magnitude, rng);
    } else {
      sub = SampleRaBaseline(ra, policy, rng);
    }
    WriteFileBytes((fs::path(args.out_dir) / files[i].filename()).string(),
                   SavePpm(AugmentImage(img, sub)));
  }
  err << "augmented " << files.size() << " images\n";
  return 0;
}

struct ScoreArgs {
  std::string checkpoint;
  std::string data;
  std::string config_path;
  std::string split = "test";
  std::string scorer = "cosine_gamma";
  std::string out_path;
  double epsilon = 2.0;
  uint64_t seed = 0;
};

int CmdScore(const ScoreArgs &args, std::ostream &out) {
  const Checkpoint ck = LoadCheckpoint(ReadFileBytes(args.checkpoint));
  const RunConfig cfg =
      ParseConfig(args.config_path.empty() ? "" : ReadText(args.config_path));
  const Split split = args.split == "train" ? Split::kTrain : Split::kTest;
  if (args.split != "train" && args.split != "test") {
    throw ConfigError("score: --split must be train or test");
  }
  const Dataset data = LoadDataSource(args.data, split, cfg.data, args.seed);
  if (data.class_count != ck.model.class_count()) {
    throw ConfigError("score: checkpoint predicts " + std::to_string(ck.model.class_count()) +
                      " classes but the data has " + std::to_string(data.class_count));
  }
  MisConfig mis;
  const auto scorer = ParseScorer(args.scorer);
  if (!scorer) throw ConfigError("score: unknown --scorer " + args.scorer);
  mis.scorer = *scorer;
  mis.epsilon = args.epsilon;
  mis.class_count = data.class_count;
  mis.Validate();

  std::ostringstream csv;
  csv << "sample_index,label,target_prob,mis\n";
  const Tensor input = NormalizeImages(data.samples, cfg.train.norm);
  const std::vector<double> logits = Forward(ck.model, input, cfg.train.threads);
  const std::size_t c = data.class_count;
  char line[128];
  for (std::size_t i = 0; i < data.samples.size(); ++i) {
    const std::span<const double> row(logits.data() + i * c, c);
    const int label = data.samples[i].label;
    const double p = Softmax(row)[label];
    std::snprintf(line, sizeof(line), "%zu,%d,%.8f,%.8f\n", i, label, p,
                  ComputeMis(row, label, mis));
    csv << line;
  }
  if (args.out_path.empty()) {
    out << csv.str();
  } else {
    const std::string s = csv.str();
    WriteFileBytes(args.out_path, std::vector<uint8_t>(s.begin(), s.end()));
  }
  return 0;
}

int CmdBench(int size, int iters, uint64_t seed, std::ostream &out) {
  if (size < 4) throw ConfigError("bench: --size must be >= 4");
  if (iters < 1) throw ConfigError("bench: --iters must be >= 1");
  constexpr int kImages = 16;
  std::vector<Image> images;
  for (int i = 0; i < kImages; ++i) {
    Stream rng = DeriveStream(seed, 0, 0, i, StreamPurpose::kData);
    Image img(size, size);
    for (auto &v : img.bytes()) v = static_cast<uint8_t>(rng.UniformInt(256));
    images.push_back(std::move(img));
  }
  out << "op,images_per_sec,img_size,iters\n";
  for (OpKind kind : kAllOpKinds) {
    const OpApplication app{kind, 0.5, 1, kDefaultFill};
    double rate_sum = 0.0;
    std::size_t checksum = 0;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      for (int i = 0; i < iters; ++i) checksum += ApplyOp(images[i % kImages], app).bytes()[0];
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rate_sum += iters / std::max(secs, 1e-9);
    }
    char line[128];
    std::snprintf(line, sizeof(line), "%s,%.1f,%d,%d\n", std::string(OpName(kind)).c_str(),
                  rate_sum / 3.0, size, iters);
    out << line;
    sink = checksum;
  }
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Sample-aware augmentation lab: train, augment, score, bench"};
  app.require_subcommand(1);

  TrainArgs train;
  auto *train_cmd = app.add_subcommand("train", "train a classifier; writes metrics.csv and model.ckpt");
  train_cmd->add_option("--config", train.config_path, "key = value config file");
  train_cmd->add_option("--out", train.out_dir, "output directory");
  train_cmd->add_option("--seed", train.seed, "overrides the seed key");
  train_cmd->add_option("--threads", train.threads, "worker threads");
  train_cmd->add_flag("--dump-config", train.dump_config, "print the effective config and exit");
  train_cmd->add_flag("--quiet", train.quiet, "no per-epoch progress on stderr");
  train_cmd->allow_extras();

  AugmentArgs augment;
  auto *augment_cmd = app.add_subcommand("augment", "augment every .ppm in a directory");
  augment_cmd->add_option("--in", augment.in_dir, "input directory")->required();
  augment_cmd->add_option("--out", augment.out_dir, "output directory")->required();
  augment_cmd->add_option("--mode", augment.mode, "explore | refine | ra");
  augment_cmd->add_option("--magnitude", augment.magnitude,
                          "shared magnitude in [0,1] (refine) or level M in [0,30] (ra)");
  augment_cmd->add_option("--magnitude-std", augment.magnitude_std, "ra: std of M");
  augment_cmd->add_option("--depth", augment.depth, "operators per image");
  augment_cmd->add_option("--seed", augment.seed, "random seed");
  augment_cmd->add_option("--ops", augment.ops, "all, or comma-separated operator names");

  ScoreArgs score;
  auto *score_cmd = app.add_subcommand("score", "per-sample MIS of a checkpoint as CSV");
  score_cmd->add_option("--checkpoint", score.checkpoint, "model.ckpt file")->required();
  score_cmd->add_option("--data", score.data, "synthetic | cifar10:<dir> | cifar100:<dir>")
      ->required();
  score_cmd->add_option("--epsilon", score.epsilon, "scaling factor epsilon");
  score_cmd->add_option("--scorer", score.scorer, "cosine_gamma | cosine_raw | euclidean | jaccard");
  score_cmd->add_option("--split", score.split, "train | test");
  score_cmd->add_option("--config", score.config_path, "config supplying data.* keys");
  score_cmd->add_option("--seed", score.seed, "seed for synthetic data");
  score_cmd->add_option("--out", score.out_path, "write CSV here instead of stdout");

  int bench_size = 32;
  int bench_iters = 200;
  uint64_t bench_seed = 0;
  auto *bench_cmd = app.add_subcommand("bench", "per-operator throughput as CSV");
  bench_cmd->add_option("--size", bench_size, "image side");
  bench_cmd->add_option("--iters", bench_iters, "applications per repeat");
  bench_cmd->add_option("--seed", bench_seed, "seed for the random test images");

  std::vector<const char *> argv;
  argv.push_back("sra");
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*train_cmd) return CmdTrain(train, train_cmd->remaining(), out, err);
    if (*augment_cmd) return CmdAugment(augment, err);
    if (*score_cmd) return CmdScore(score, out);
    if (*bench_cmd) return CmdBench(bench_size, bench_iters, bench_seed, out);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace sra
