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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sra/image.h"
#include "sra/rng.h"

namespace sra {

// NHWC batch of normalized images (or any dense activations).
struct Tensor {
  int n = 0;
  int h = 0;
  int w = 0;
  int c = 0;
  std::vector<double> data;

  std::size_t sample_size() const { return static_cast<std::size_t>(h) * w * c; }
  std::span<const double> sample(int i) const {
    return std::span<const double>(data).subspan(i * sample_size(), sample_size());
  }
};

struct NormConfig {
  std::array<double, 3> mean = {0.5, 0.5, 0.5};
  std::array<double, 3> std = {0.5, 0.5, 0.5};

  friend bool operator==(const NormConfig &, const NormConfig &) = default;
};

// (v / 255 - mean) / std per channel. All images must share one size.
Tensor NormalizeImages(std::span<const Image> images, const NormConfig &norm);
Tensor NormalizeImages(std::span<const LabeledImage> samples, const NormConfig &norm);

enum class LayerKind { kConv3x3, kRelu, kMaxPool2, kGlobalAvgPool, kFlatten, kLinear };

struct LayerSpec {
  LayerKind kind;
  int units = 0;  // output channels (conv) or features (linear)

  // Shapes and parameter slice, resolved when the model is built.
  int in_h = 0, in_w = 0, in_c = 0;
  int out_h = 0, out_w = 0, out_c = 0;
  std::size_t param_offset = 0;
  std::size_t weight_count = 0;
  std::size_t bias_count = 0;

  friend bool operator==(const LayerSpec &, const LayerSpec &) = default;
};

// Default classifier body; "linear" with no width maps to the class count.
inline constexpr const char *kDefaultArch =
    "conv3x3:16,relu,maxpool2,conv3x3:32,relu,maxpool2,gap,linear";

// A small feed-forward classifier over a flat parameter vector.
//
// The descriptor is "HxWxC>layer,layer,...", for example
// "32x32x3>conv3x3:16,relu,maxpool2,conv3x3:32,relu,maxpool2,gap,linear:10".
// The final layer must be linear; its width is the class count.
class Model {
 public:
  Model() = default;
  // Builds the layer stack with all parameters zero.
  explicit Model(const std::string &descriptor);
  Model(int height, int width, const std::string &arch, int class_count);

  const std::string &descriptor() const { return descriptor_; }
  const std::vector<LayerSpec> &layers() const { return layers_; }
  int input_height() const { return in_h_; }
  int input_width() const { return in_w_; }
  int class_count() const { return layers_.back().out_c; }

  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }
  std::size_t param_count() const { return params_.size(); }

  // Fan-in scaled normal weights, zero biases. With `zero_head` the final
  // linear layer starts at zero so an untrained model predicts uniformly.
  void InitializeHe(Stream &rng, bool zero_head = true);

  // FNV-1a over parameter bytes; a cheap mutation probe.
  uint64_t ParamChecksum() const;

  friend bool operator==(const Model &, const Model &) = default;

 private:
  std::string descriptor_;
  int in_h_ = 0, in_w_ = 0, in_c_ = 0;
  std::vector<LayerSpec> layers_;
  std::vector<double> params_;
};

// Logits, row-major n x class_count. Never mutates the model.
std::vector<double> Forward(const Model &model, const Tensor &batch, int threads = 1);

struct LossAndGrad {
  double loss = 0.0;
  std::vector<double> grad;
};

// Mean cross-entropy against label-smoothed targets (1 - s + s/c on the label,
// s/c elsewhere) and its exact gradient. Per-sample gradients are reduced in
// sample order, so the result does not depend on `threads`.
LossAndGrad LossAndGradient(const Model &model, const Tensor &batch,
                            std::span<const int> labels, double smoothing, int threads = 1);

struct OptimState {
  double base_lr = 0.05;
  double momentum = 0.9;
  double weight_decay = 5e-4;
  double label_smoothing = 0.0;
  std::vector<double> velocity;

  friend bool operator==(const OptimState &, const OptimState &) = default;
};

// v <- mu * v + g + wd * theta;  theta <- theta - lr * v.
void SgdStep(Model &model, OptimState &optim, std::span<const double> grad, double lr);

struct LrSchedule {
  int warmup_epochs = 2;
  int total_epochs = 30;
  int64_t iters_per_epoch = 1;
  double base_lr = 0.05;

  int64_t warmup_iters() const { return warmup_epochs * iters_per_epoch; }
  int64_t total_iters() const { return total_epochs * iters_per_epoch; }
};

// Linear warmup from 0, then cosine decay reaching exactly 0 on the last
// iteration.
double LrAt(const LrSchedule &schedule, int64_t global_iter);

// Maximum relative error |ga - gfd| / max(|ga|, |gfd|, 1e-8) between
// `analytic` and central differences, over the given parameter indices.
double GradCheck(const Model &model, const Tensor &batch, std::span<const int> labels,
                 double smoothing, std::span<const std::size_t> indices,
                 std::span<const double> analytic, double step = 1e-5);
// Same, computing the analytic gradient with LossAndGradient.
double GradCheck(const Model &model, const Tensor &batch, std::span<const int> labels,
                 double smoothing, std::span<const std::size_t> indices, double step = 1e-5);
// `count` distinct indices in [0, total), or all of them when count >= total.
std::vector<std::size_t> SampleParamIndices(std::size_t count, std::size_t total, Stream &rng);

// "SRACKPT1" | u64 descriptor length | descriptor | u64 n | n x f32 params
//            | u64 m | m x f32 momentum. Integers and floats little-endian.
std::vector<uint8_t> SaveCheckpoint(const Model &model, const OptimState &optim);

struct Checkpoint {
  Model model;
  std::vector<double> velocity;
};
Checkpoint LoadCheckpoint(std::span<const uint8_t> bytes);

}  // namespace sra
