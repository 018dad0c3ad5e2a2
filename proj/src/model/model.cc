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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numeric>

#include "layers.h"
#include "sra/error.h"
#include "sra/model.h"
#include "sra/parallel.h"

namespace sra {
namespace {

void ParseInputShape(const std::string &shape, int *h, int *w, int *c) {
  if (std::sscanf(shape.c_str(), "%dx%dx%d", h, w, c) != 3 || *h < 1 || *w < 1 || *c < 1) {
    throw ConfigError("model descriptor: bad input shape '" + shape + "'");
  }
}

template <typename Samples, typename GetImage>
Tensor Normalize(const Samples &samples, GetImage get, const NormConfig &norm) {
  Tensor t;
  t.n = static_cast<int>(samples.size());
  t.c = kChannels;
  if (samples.empty()) return t;
  t.h = get(samples[0]).height();
  t.w = get(samples[0]).width();
  t.data.resize(t.n * t.sample_size());
  double scale[3], shift[3];
  for (int c = 0; c < 3; ++c) {
    scale[c] = 1.0 / (255.0 * norm.std[c]);
    shift[c] = norm.mean[c] / norm.std[c];
  }
  std::size_t k = 0;
  for (const auto &s : samples) {
    const Image &img = get(s);
    Expect(img.width() == t.w && img.height() == t.h, "normalize: images differ in size");
    const auto bytes = img.bytes();
    for (std::size_t i = 0; i < bytes.size(); ++i) {
      t.data[k++] = bytes[i] * scale[i % 3] - shift[i % 3];
    }
  }
  return t;
}

void CheckInput(const Model &model, const Tensor &batch) {
  Expect(batch.h == model.input_height() && batch.w == model.input_width() &&
             batch.c == kChannels,
         "model input shape mismatch");
}

}  // namespace

Tensor NormalizeImages(std::span<const Image> images, const NormConfig &norm) {
  return Normalize(images, [](const Image &i) -> const Image & { return i; }, norm);
}

Tensor NormalizeImages(std::span<const LabeledImage> samples, const NormConfig &norm) {
  return Normalize(samples, [](const LabeledImage &s) -> const Image & { return s.image; },
                   norm);
}

Model::Model(const std::string &descriptor) : descriptor_(descriptor) {
  const auto sep = descriptor.find('>');
  if (sep == std::string::npos) throw ConfigError("model descriptor lacks '>'");
  ParseInputShape(descriptor.substr(0, sep), &in_h_, &in_w_, &in_c_);
  if (in_c_ != kChannels) throw ConfigError("model input must have 3 channels");
  std::size_t total = 0;
  layers_ = internal::BuildLayers(descriptor.substr(sep + 1), in_h_, in_w_, in_c_, 0, &total);
  if (class_count() < 2) throw ConfigError("final linear layer needs >= 2 outputs");
  params_.assign(total, 0.0);
}

Model::Model(int height, int width, const std::string &arch, int class_count) {
  in_h_ = height, in_w_ = width, in_c_ = kChannels;
  std::size_t total = 0;
  layers_ = internal::BuildLayers(arch, in_h_, in_w_, in_c_, class_count, &total);
  if (this->class_count() != class_count) {
    throw ConfigError("final linear width does not match the class count");
  }
  params_.assign(total, 0.0);
  std::string body;
  for (const LayerSpec &l : layers_) {
    if (!body.empty()) body += ',';
    switch (l.kind) {
      case LayerKind::kConv3x3: body += "conv3x3:" + std::to_string(l.units); break;
      case LayerKind::kRelu: body += "relu"; break;
      case LayerKind::kMaxPool2: body += "maxpool2"; break;
      case LayerKind::kGlobalAvgPool: body += "gap"; break;
      case LayerKind::kFlatten: body += "flatten"; break;
      case LayerKind::kLinear: body += "linear:" + std::to_string(l.units); break;
    }
  }
  descriptor_ = std::to_string(height) + "x" + std::to_string(width) + "x3>" + body;
}

void Model::InitializeHe(Stream &rng, bool zero_head) {
  std::fill(params_.begin(), params_.end(), 0.0);
  for (std::size_t li = 0; li < layers_.size(); ++li) {
    const LayerSpec &l = layers_[li];
    if (l.weight_count == 0) continue;
    if (zero_head && li + 1 == layers_.size()) continue;
    const double fan_in =
        l.kind == LayerKind::kConv3x3 ? 9.0 * l.in_c : static_cast<double>(l.in_c);
    const double sd = std::sqrt(2.0 / fan_in);
    for (std::size_t i = 0; i < l.weight_count; ++i) {
      params_[l.param_offset + i] = sd * rng.Normal();
    }
  }
}

uint64_t Model::ParamChecksum() const {
  uint64_t h = 0xcbf29ce484222325ull;
  const auto *bytes = reinterpret_cast<const unsigned char *>(params_.data());
  for (std::size_t i = 0; i < params_.size() * sizeof(double); ++i) {
    h = (h ^ bytes[i]) * 0x100000001b3ull;
  }
  return h;
}

std::vector<double> Forward(const Model &model, const Tensor &batch, int threads) {
  CheckInput(model, batch);
  const int classes = model.class_count();
  std::vector<double> logits(static_cast<std::size_t>(batch.n) * classes);
  ParallelFor(batch.n, threads, [&](std::size_t i) {
    internal::SampleTrace trace;
    internal::ForwardSample(model.layers(), model.params(), batch.sample(static_cast<int>(i)),
                            trace);
    std::copy(trace.acts.back().begin(), trace.acts.back().end(), logits.begin() + i * classes);
  });
  return logits;
}

LossAndGrad LossAndGradient(const Model &model, const Tensor &batch,
                            std::span<const int> labels, double smoothing, int threads) {
  CheckInput(model, batch);
  Expect(labels.size() == static_cast<std::size_t>(batch.n), "one label per sample required");
  Expect(smoothing >= 0.0 && smoothing < 1.0, "label smoothing must lie in [0, 1)");
  const int classes = model.class_count();
  for (int y : labels) Expect(y >= 0 && y < classes, "label out of range");

  LossAndGrad result;
  result.grad.assign(model.param_count(), 0.0);
  if (batch.n == 0) return result;

  const std::size_t p = model.param_count();
  std::vector<double> per_sample_grad(static_cast<std::size_t>(batch.n) * p, 0.0);
  std::vector<double> per_sample_loss(batch.n, 0.0);
  const double inv_n = 1.0 / batch.n;
  const double off = smoothing / classes;
  const double on = 1.0 - smoothing + off;

  ParallelFor(batch.n, threads, [&](std::size_t i) {
    internal::SampleTrace trace;
    internal::ForwardSample(model.layers(), model.params(), batch.sample(static_cast<int>(i)),
                            trace);
    const std::vector<double> &logits = trace.acts.back();
    const double peak = *std::max_element(logits.begin(), logits.end());
    double z = 0.0;
    for (double v : logits) z += std::exp(v - peak);
    const double log_z = std::log(z) + peak;
    std::vector<double> dlogits(classes);
    double loss = 0.0;
    for (int k = 0; k < classes; ++k) {
      const double target = k == labels[i] ? on : off;
      const double log_p = logits[k] - log_z;
      loss -= target * log_p;
      dlogits[k] = (std::exp(log_p) - target) * inv_n;
    }
    per_sample_loss[i] = loss;
    internal::BackwardSample(model.layers(), model.params(), trace, dlogits,
                             std::span<double>(per_sample_grad).subspan(i * p, p));
  });

  for (int i = 0; i < batch.n; ++i) {
    result.loss += per_sample_loss[i];
    const double *g = per_sample_grad.data() + static_cast<std::size_t>(i) * p;
    for (std::size_t k = 0; k < p; ++k) result.grad[k] += g[k];
  }
  result.loss *= inv_n;
  return result;
}

std::vector<std::size_t> SampleParamIndices(std::size_t count, std::size_t total, Stream &rng) {
  std::vector<std::size_t> all(total);
  std::iota(all.begin(), all.end(), 0);
  if (count >= total) return all;
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.UniformInt(total - i);
    std::swap(all[i], all[j]);
  }
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

double GradCheck(const Model &model, const Tensor &batch, std::span<const int> labels,
                 double smoothing, std::span<const std::size_t> indices,
                 std::span<const double> analytic, double step) {
  Expect(analytic.size() == model.param_count(), "grad_check: gradient size mismatch");
  Model probe = model;
  double worst = 0.0;
  for (std::size_t idx : indices) {
    Expect(idx < model.param_count(), "grad_check: parameter index out of range");
    const double saved = probe.params()[idx];
    probe.params()[idx] = saved + step;
    const double up = LossAndGradient(probe, batch, labels, smoothing).loss;
    probe.params()[idx] = saved - step;
    const double down = LossAndGradient(probe, batch, labels, smoothing).loss;
    probe.params()[idx] = saved;
    const double numeric = (up - down) / (2.0 * step);
    const double a = analytic[idx];
    const double denom = std::max({std::fabs(a), std::fabs(numeric), 1e-8});
    worst = std::max(worst, std::fabs(a - numeric) / denom);
  }
  return worst;
}

double GradCheck(const Model &model, const Tensor &batch, std::span<const int> labels,
                 double smoothing, std::span<const std::size_t> indices, double step) {
  const LossAndGrad lg = LossAndGradient(model, batch, labels, smoothing);
  return GradCheck(model, batch, labels, smoothing, indices, lg.grad, step);
}

}  // namespace sra
