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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sra {

inline constexpr int kChannels = 3;

struct Rgb {
  uint8_t r = 0;
  uint8_t g = 0;
  uint8_t b = 0;

  friend bool operator==(const Rgb &, const Rgb &) = default;
};

// Interleaved row-major RGB, 8 bits per channel.
class Image {
 public:
  Image() = default;
  Image(int width, int height, uint8_t value = 0);
  Image(int width, int height, std::vector<uint8_t> data);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }
  bool empty() const { return data_.empty(); }

  uint8_t at(int x, int y, int c) const { return data_[Offset(x, y) + c]; }
  uint8_t &at(int x, int y, int c) { return data_[Offset(x, y) + c]; }
  Rgb pixel(int x, int y) const;
  void set_pixel(int x, int y, Rgb value);

  std::span<const uint8_t> bytes() const { return data_; }
  std::span<uint8_t> bytes() { return data_; }
  const uint8_t *row(int y) const { return data_.data() + Offset(0, y); }
  uint8_t *row(int y) { return data_.data() + Offset(0, y); }

  bool SameShape(const Image &other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Image &, const Image &) = default;

 private:
  std::size_t Offset(int x, int y) const {
    return (static_cast<std::size_t>(y) * width_ + x) * kChannels;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> data_;
};

struct LabeledImage {
  Image image;
  int label = 0;

  friend bool operator==(const LabeledImage &, const LabeledImage &) = default;
};

enum class Split { kTrain, kTest };

struct Dataset {
  std::vector<LabeledImage> samples;
  int class_count = 0;
  Split split = Split::kTrain;

  std::size_t size() const { return samples.size(); }
  // Throws ContractViolation unless class_count >= 2 and every label is in range.
  void Validate() const;

  friend bool operator==(const Dataset &, const Dataset &) = default;
};

enum class CifarFormat { kCifar10, kCifar100 };

inline constexpr std::size_t kCifarPixels = 32 * 32 * 3;
std::size_t CifarRecordSize(CifarFormat format);
int CifarClassCount(CifarFormat format);

// Parses concatenated CIFAR binary records. CIFAR-100 keeps the fine label.
Dataset LoadCifarBatch(std::span<const uint8_t> bytes, CifarFormat format,
                       Split split = Split::kTrain);

// Binary PPM (P6, maxval 255).
Image LoadPpm(std::span<const uint8_t> bytes);
std::vector<uint8_t> SavePpm(const Image &image);

// Renders one distinct colored shape per class over a noise background.
// Pure function of its arguments.
Dataset SynthesizeDataset(uint64_t seed, int class_count, int samples_per_class,
                          int size);

std::vector<uint8_t> ReadFileBytes(const std::string &path);
void WriteFileBytes(const std::string &path, std::span<const uint8_t> bytes);

}  // namespace sra
