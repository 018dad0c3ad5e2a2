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

#include <string>
#include <utility>
#include <vector>

#include "sra/image.h"
#include "sra/trainer.h"

namespace sra {

struct DataConfig {
  // "synthetic", "cifar10:<dir>" or "cifar100:<dir>".
  std::string source = "synthetic";
  int synthetic_classes = 4;
  int train_per_class = 50;
  int test_per_class = 25;
  int image_size = 32;
  int train_limit = 0;  // 0 keeps every sample
  int test_limit = 0;

  friend bool operator==(const DataConfig &, const DataConfig &) = default;
};

struct RunConfig {
  TrainConfig train;
  DataConfig data;

  friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

// Flat "key = value" document. Later layers win: defaults, then `text`, then
// `overrides` (typically command-line flags). Unknown keys, unparsable values
// and violated bounds raise ConfigError naming the key and its line or flag.
RunConfig ParseConfig(const std::string &text,
                      const std::vector<std::pair<std::string, std::string>> &overrides = {});

// Every key with its current value, one per line; ParseConfig reads it back
// to an equal RunConfig.
std::string DumpConfig(const RunConfig &cfg);

struct ConfigKeyInfo {
  std::string key;
  std::string default_value;
  std::string doc;
};
std::vector<ConfigKeyInfo> ConfigKeys();

// Loads the configured train and test sets. Synthetic data is derived from `seed`.
std::pair<Dataset, Dataset> LoadDatasets(const DataConfig &data, uint64_t seed);
// Loads one split of a source string (see DataConfig::source).
Dataset LoadDataSource(const std::string &source, Split split, const DataConfig &data,
                       uint64_t seed);

}  // namespace sra
