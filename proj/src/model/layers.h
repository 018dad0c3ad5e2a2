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

#include <span>
#include <string>
#include <vector>

#include "sra/model.h"

namespace sra::internal {

// Parses "conv3x3:16,relu,..." against an input shape, resolving shapes and
// parameter offsets. A bare "linear" takes `default_linear` units.
std::vector<LayerSpec> BuildLayers(const std::string &arch, int h, int w, int c,
                                   int default_linear, std::size_t *param_total);

// Activations of one sample: acts[i] is the input of layer i, acts.back() the
// logits. Max-pool layers also record the flat index that won each window.
struct SampleTrace {
  std::vector<std::vector<double>> acts;
  std::vector<std::vector<int>> argmax;
};

void ForwardSample(const std::vector<LayerSpec> &layers, std::span<const double> params,
                   std::span<const double> input, SampleTrace &trace);

// Accumulates d(loss)/d(params) into `grad` given d(loss)/d(logits).
void BackwardSample(const std::vector<LayerSpec> &layers, std::span<const double> params,
                    const SampleTrace &trace, std::span<const double> dlogits,
                    std::span<double> grad);

}  // namespace sra::internal
