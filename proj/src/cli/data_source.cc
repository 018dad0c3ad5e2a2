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

#include <filesystem>

#include "sra/config.h"
#include "sra/error.h"
#include "sra/rng.h"

namespace sra {
namespace {

namespace fs = std::filesystem;

constexpr uint64_t kTrainDataTag = 0x747261696e;  // "train"
constexpr uint64_t kTestDataTag = 0x74657374;     // "test"

Dataset LoadCifarFiles(const std::vector<fs::path> &files, CifarFormat format, Split split) {
  Dataset out;
  out.class_count = CifarClassCount(format);
  out.split = split;
  for (const auto &f : files) {
    Dataset part = LoadCifarBatch(ReadFileBytes(f.string()), format, split);
    for (auto &s : part.samples) out.samples.push_back(std::move(s));
  }
  return out;
}

Dataset LoadCifar(const std::string &location, CifarFormat format, Split split) {
  const fs::path path(location);
  if (fs::is_regular_file(path)) return LoadCifarFiles({path}, format, split);
  if (!fs::is_directory(path)) throw MalformedInput("no such CIFAR file or directory: " + location);
  std::vector<fs::path> files;
  if (format == CifarFormat::kCifar10) {
    if (split == Split::kTrain) {
      for (int i = 1; i <= 5; ++i) files.push_back(path / ("data_batch_" + std::to_string(i) + ".bin"));
    } else {
      files.push_back(path / "test_batch.bin");
    }
  } else {
    files.push_back(path / (split == Split::kTrain ? "train.bin" : "test.bin"));
  }
  for (const auto &f : files) {
    if (!fs::is_regular_file(f)) throw MalformedInput("missing CIFAR file " + f.string());
  }
  return LoadCifarFiles(files, format, split);
}

void Truncate(Dataset &d, int limit) {
  if (limit > 0 && d.samples.size() > static_cast<std::size_t>(limit)) d.samples.resize(limit);
}

}  // namespace

Dataset LoadDataSource(const std::string &source, Split split, const DataConfig &data,
                       uint64_t seed) {
  Dataset out;
  if (source == "synthetic") {
    const bool train = split == Split::kTrain;
    out = SynthesizeDataset(Mix64(seed ^ (train ? kTrainDataTag : kTestDataTag)),
                            data.synthetic_classes,
                            train ? data.train_per_class : data.test_per_class, data.image_size);
    out.split = split;
  } else if (source.rfind("cifar100:", 0) == 0) {
    out = LoadCifar(source.substr(9), CifarFormat::kCifar100, split);
  } else if (source.rfind("cifar10:", 0) == 0) {
    out = LoadCifar(source.substr(8), CifarFormat::kCifar10, split);
  } else {
    throw ConfigError("unknown data source '" + source + "'");
  }
  Truncate(out, split == Split::kTrain ? data.train_limit : data.test_limit);
  return out;
}

std::pair<Dataset, Dataset> LoadDatasets(const DataConfig &data, uint64_t seed) {
  return {LoadDataSource(data.source, Split::kTrain, data, seed),
          LoadDataSource(data.source, Split::kTest, data, seed)};
}

}  // namespace sra
