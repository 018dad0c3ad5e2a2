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

#include "sra/config.h"

#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include "sra/error.h"

namespace sra {
namespace {

std::string Trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Thrown by setters; the caller adds the key and location.
struct BadValue {
  std::string why;
};

int64_t ParseInt(const std::string &v) {
  int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw BadValue{"expected an integer"};
  return out;
}

double ParseDouble(const std::string &v) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw BadValue{"expected a finite number"};
  }
  return out;
}

bool ParseBool(const std::string &v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw BadValue{"expected true or false"};
}

std::vector<std::string> SplitList(const std::string &v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Trim(item));
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

int IntAtLeast(const std::string &v, int64_t lo, const char *bound) {
  const int64_t n = ParseInt(v);
  if (n < lo || n > 1'000'000'000) throw BadValue{std::string("must be ") + bound};
  return static_cast<int>(n);
}

double DoubleIn(const std::string &v, double lo, double hi, bool hi_open, const char *bound) {
  const double d = ParseDouble(v);
  if (d < lo || d > hi || (hi_open && d == hi)) throw BadValue{std::string("must be ") + bound};
  return d;
}

std::array<double, 3> Triple(const std::string &v, bool positive) {
  const auto parts = SplitList(v);
  if (parts.size() != 3) throw BadValue{"expected three comma-separated numbers"};
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = ParseDouble(parts[i]);
    if (positive && !(out[i] > 0.0)) throw BadValue{"entries must be > 0"};
  }
  return out;
}

std::string TripleString(const std::array<double, 3> &t) {
  return FormatDouble(t[0]) + "," + FormatDouble(t[1]) + "," + FormatDouble(t[2]);
}

struct KeySpec {
  const char *key;
  const char *doc;
  std::function<std::string(const RunConfig &)> get;
  std::function<void(RunConfig &, const std::string &)> set;
};

const std::vector<KeySpec> &Keys() {
  static const std::vector<KeySpec> keys = {
      {"seed", "single source of all randomness",
       [](const RunConfig &c) { return std::to_string(c.train.seed); },
       [](RunConfig &c, const std::string &v) {
         if (!v.empty() && v[0] == '-') throw BadValue{"must be >= 0"};
         uint64_t out = 0;
         const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
         if (ec != std::errc() || ptr != v.data() + v.size()) {
           throw BadValue{"expected an unsigned integer"};
         }
         c.train.seed = out;
       }},
      {"data.source", "synthetic | cifar10:<dir> | cifar100:<dir>",
       [](const RunConfig &c) { return c.data.source; },
       [](RunConfig &c, const std::string &v) {
         if (v != "synthetic" && v.rfind("cifar10:", 0) != 0 && v.rfind("cifar100:", 0) != 0) {
           throw BadValue{"expected synthetic, cifar10:<dir> or cifar100:<dir>"};
         }
         c.data.source = v;
       }},
      {"data.synthetic_classes", "class count of the synthetic set (>= 2)",
       [](const RunConfig &c) { return std::to_string(c.data.synthetic_classes); },
       [](RunConfig &c, const std::string &v) {
         c.data.synthetic_classes = IntAtLeast(v, 2, ">= 2");
       }},
      {"data.train_per_class", "synthetic training samples per class",
       [](const RunConfig &c) { return std::to_string(c.data.train_per_class); },
       [](RunConfig &c, const std::string &v) {
         c.data.train_per_class = IntAtLeast(v, 1, ">= 1");
       }},
      {"data.test_per_class", "synthetic test samples per class",
       [](const RunConfig &c) { return std::to_string(c.data.test_per_class); },
       [](RunConfig &c, const std::string &v) {
         c.data.test_per_class = IntAtLeast(v, 0, ">= 0");
       }},
      {"data.image_size", "synthetic image side in pixels",
       [](const RunConfig &c) { return std::to_string(c.data.image_size); },
       [](RunConfig &c, const std::string &v) { c.data.image_size = IntAtLeast(v, 4, ">= 4"); }},
      {"data.train_limit", "keep the first N training samples (0 = all)",
       [](const RunConfig &c) { return std::to_string(c.data.train_limit); },
       [](RunConfig &c, const std::string &v) { c.data.train_limit = IntAtLeast(v, 0, ">= 0"); }},
      {"data.test_limit", "keep the first N test samples (0 = all)",
       [](const RunConfig &c) { return std::to_string(c.data.test_limit); },
       [](RunConfig &c, const std::string &v) { c.data.test_limit = IntAtLeast(v, 0, ">= 0"); }},
      {"trainer.mode",
       "sra | ra_baseline | basic | ablation-{no_explore_random,all_explore,all_refine,one_batch}",
       [](const RunConfig &c) { return std::string(ModeName(c.train.mode)); },
       [](RunConfig &c, const std::string &v) {
         const auto m = ParseMode(v);
         if (!m) throw BadValue{"unknown mode"};
         c.train.mode = *m;
       }},
      {"trainer.epochs", "training epochs",
       [](const RunConfig &c) { return std::to_string(c.train.epochs); },
       [](RunConfig &c, const std::string &v) { c.train.epochs = IntAtLeast(v, 0, ">= 0"); }},
      {"trainer.large_batch_size", "samples per large batch (2B, even)",
       [](const RunConfig &c) { return std::to_string(c.train.large_batch_size); },
       [](RunConfig &c, const std::string &v) {
         const int n = IntAtLeast(v, 2, "even and >= 2");
         if (n % 2 != 0) throw BadValue{"must be even and >= 2"};
         c.train.large_batch_size = n;
       }},
      {"trainer.repeat", "Batch Augment copies per sample (K >= 1)",
       [](const RunConfig &c) { return std::to_string(c.train.repeat); },
       [](RunConfig &c, const std::string &v) { c.train.repeat = IntAtLeast(v, 1, ">= 1"); }},
      {"trainer.eval_every", "evaluate the test set every N epochs (and at the end)",
       [](const RunConfig &c) { return std::to_string(c.train.eval_every); },
       [](RunConfig &c, const std::string &v) { c.train.eval_every = IntAtLeast(v, 1, ">= 1"); }},
      {"trainer.threads", "worker threads; results do not depend on it",
       [](const RunConfig &c) { return std::to_string(c.train.threads); },
       [](RunConfig &c, const std::string &v) { c.train.threads = IntAtLeast(v, 1, ">= 1"); }},
      {"trainer.record_seconds", "fill the wall-clock seconds column (breaks byte-reproducibility)",
       [](const RunConfig &c) { return std::string(c.train.record_seconds ? "true" : "false"); },
       [](RunConfig &c, const std::string &v) { c.train.record_seconds = ParseBool(v); }},
      {"policy.depth", "operators per sub-policy (D >= 1)",
       [](const RunConfig &c) { return std::to_string(c.train.policy.depth); },
       [](RunConfig &c, const std::string &v) { c.train.policy.depth = IntAtLeast(v, 1, ">= 1"); }},
      {"policy.ops", "all, or a comma-separated list of operator names",
       [](const RunConfig &c) {
         if (c.train.policy.operator_subset ==
             std::vector<OpKind>(kAllOpKinds.begin(), kAllOpKinds.end())) {
           return std::string("all");
         }
         std::string out;
         for (OpKind k : c.train.policy.operator_subset) {
           if (!out.empty()) out += ',';
           out += OpName(k);
         }
         return out;
       },
       [](RunConfig &c, const std::string &v) {
         if (v == "all") {
           c.train.policy.operator_subset.assign(kAllOpKinds.begin(), kAllOpKinds.end());
           return;
         }
         std::vector<OpKind> ops;
         for (const auto &name : SplitList(v)) {
           const auto k = ParseOpKind(name);
           if (!k) throw BadValue{"unknown operator '" + name + "'"};
           ops.push_back(*k);
         }
         if (ops.empty()) throw BadValue{"must name at least one operator"};
         c.train.policy.operator_subset = ops;
       }},
      {"policy.fill", "fill color r,g,b for geometric operators",
       [](const RunConfig &c) {
         const Rgb f = c.train.policy.fill;
         return std::to_string(f.r) + "," + std::to_string(f.g) + "," + std::to_string(f.b);
       },
       [](RunConfig &c, const std::string &v) {
         const auto parts = SplitList(v);
         if (parts.size() != 3) throw BadValue{"expected r,g,b"};
         uint8_t rgb[3];
         for (int i = 0; i < 3; ++i) {
           const int64_t n = ParseInt(parts[i]);
           if (n < 0 || n > 255) throw BadValue{"channels must lie in [0, 255]"};
           rgb[i] = static_cast<uint8_t>(n);
         }
         c.train.policy.fill = {rgb[0], rgb[1], rgb[2]};
       }},
      {"ra.n_ops", "RandAugment baseline: operators per image (N >= 1)",
       [](const RunConfig &c) { return std::to_string(c.train.ra.n_ops); },
       [](RunConfig &c, const std::string &v) { c.train.ra.n_ops = IntAtLeast(v, 1, ">= 1"); }},
      {"ra.magnitude", "RandAugment baseline: level M in [0, 30]",
       [](const RunConfig &c) { return FormatDouble(c.train.ra.magnitude_level); },
       [](RunConfig &c, const std::string &v) {
         c.train.ra.magnitude_level = DoubleIn(v, 0.0, 30.0, false, "in [0, 30]");
       }},
      {"ra.magnitude_std", "RandAugment baseline: std of M (0 = plain RA)",
       [](const RunConfig &c) { return FormatDouble(c.train.ra.magnitude_std); },
       [](RunConfig &c, const std::string &v) {
         c.train.ra.magnitude_std = DoubleIn(v, 0.0, 1e9, false, ">= 0");
       }},
      {"mis.scorer", "cosine_gamma | cosine_raw | euclidean | jaccard",
       [](const RunConfig &c) { return std::string(ScorerName(c.train.mis.scorer)); },
       [](RunConfig &c, const std::string &v) {
         const auto s = ParseScorer(v);
         if (!s) throw BadValue{"unknown scorer"};
         c.train.mis.scorer = *s;
       }},
      {"mis.epsilon", "scaling factor epsilon (>= 0); gamma = epsilon / ln c",
       [](const RunConfig &c) { return FormatDouble(c.train.mis.epsilon); },
       [](RunConfig &c, const std::string &v) {
         c.train.mis.epsilon = DoubleIn(v, 0.0, 1e9, false, ">= 0 (epsilon >= 0)");
       }},
      {"model.arch", "layer list; a bare 'linear' gets the class count",
       [](const RunConfig &c) { return c.train.arch; },
       [](RunConfig &c, const std::string &v) {
         if (v.empty()) throw BadValue{"must not be empty"};
         c.train.arch = v;
       }},
      {"model.norm_mean", "per-channel normalization mean",
       [](const RunConfig &c) { return TripleString(c.train.norm.mean); },
       [](RunConfig &c, const std::string &v) { c.train.norm.mean = Triple(v, false); }},
      {"model.norm_std", "per-channel normalization std (> 0)",
       [](const RunConfig &c) { return TripleString(c.train.norm.std); },
       [](RunConfig &c, const std::string &v) { c.train.norm.std = Triple(v, true); }},
      {"optim.base_lr", "peak learning rate",
       [](const RunConfig &c) { return FormatDouble(c.train.base_lr); },
       [](RunConfig &c, const std::string &v) {
         c.train.base_lr = DoubleIn(v, 0.0, 1e9, false, ">= 0");
       }},
      {"optim.momentum", "SGD momentum in [0, 1)",
       [](const RunConfig &c) { return FormatDouble(c.train.momentum); },
       [](RunConfig &c, const std::string &v) {
         c.train.momentum = DoubleIn(v, 0.0, 1.0, true, "in [0, 1)");
       }},
      {"optim.weight_decay", "L2 weight decay folded into the gradient",
       [](const RunConfig &c) { return FormatDouble(c.train.weight_decay); },
       [](RunConfig &c, const std::string &v) {
         c.train.weight_decay = DoubleIn(v, 0.0, 1e9, false, ">= 0");
       }},
      {"optim.label_smoothing", "label smoothing in [0, 1)",
       [](const RunConfig &c) { return FormatDouble(c.train.label_smoothing); },
       [](RunConfig &c, const std::string &v) {
         c.train.label_smoothing = DoubleIn(v, 0.0, 1.0, true, "in [0, 1)");
       }},
      {"optim.warmup_epochs", "linear warmup epochs (< trainer.epochs)",
       [](const RunConfig &c) { return std::to_string(c.train.warmup_epochs); },
       [](RunConfig &c, const std::string &v) {
         c.train.warmup_epochs = IntAtLeast(v, 0, ">= 0");
       }},
  };
  return keys;
}

const KeySpec *FindKey(const std::string &key) {
  for (const auto &k : Keys()) {
    if (key == k.key) return &k;
  }
  return nullptr;
}

void Apply(RunConfig &cfg, const std::string &key, const std::string &value,
           const std::string &where) {
  const KeySpec *spec = FindKey(key);
  if (!spec) throw ConfigError(where + ": unknown key '" + key + "'");
  try {
    spec->set(cfg, value);
  } catch (const BadValue &bad) {
    throw ConfigError(where + ": " + key + " = " + value + ": " + bad.why);
  }
}

}  // namespace

RunConfig ParseConfig(const std::string &text,
                      const std::vector<std::pair<std::string, std::string>> &overrides) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(line_no);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    Apply(cfg, Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)), where);
  }
  for (const auto &[key, value] : overrides) Apply(cfg, key, value, "flag --" + key);

  try {
    cfg.train.Validate();
  } catch (const ConfigError &e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

std::string DumpConfig(const RunConfig &cfg) {
  std::string out;
  for (const auto &k : Keys()) out += std::string(k.key) + " = " + k.get(cfg) + "\n";
  return out;
}

std::vector<ConfigKeyInfo> ConfigKeys() {
  const RunConfig defaults;
  std::vector<ConfigKeyInfo> out;
  for (const auto &k : Keys()) out.push_back({k.key, k.get(defaults), k.doc});
  return out;
}

}  // namespace sra
