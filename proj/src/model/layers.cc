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

#include "layers.h"

#include <algorithm>
#include <sstream>

#include "sra/error.h"

namespace sra::internal {
namespace {

LayerSpec ParseLayer(const std::string &token, int default_linear) {
  const auto colon = token.find(':');
  const std::string name = token.substr(0, colon);
  int units = 0;
  if (colon != std::string::npos) {
    try {
      units = std::stoi(token.substr(colon + 1));
    } catch (const std::exception &) {
      throw ConfigError("model layer '" + token + "': bad width");
    }
    if (units < 1) throw ConfigError("model layer '" + token + "': width must be >= 1");
  }
  if (name == "conv3x3") {
    if (units == 0) throw ConfigError("conv3x3 needs an output width, e.g. conv3x3:16");
    return {LayerKind::kConv3x3, units};
  }
  if (name == "linear") return {LayerKind::kLinear, units == 0 ? default_linear : units};
  if (colon != std::string::npos) throw ConfigError("layer '" + name + "' takes no width");
  if (name == "relu") return {LayerKind::kRelu};
  if (name == "maxpool2") return {LayerKind::kMaxPool2};
  if (name == "gap") return {LayerKind::kGlobalAvgPool};
  if (name == "flatten") return {LayerKind::kFlatten};
  throw ConfigError("unknown model layer '" + name + "'");
}

}  // namespace

std::vector<LayerSpec> BuildLayers(const std::string &arch, int h, int w, int c,
                                   int default_linear, std::size_t *param_total) {
  std::vector<LayerSpec> layers;
  std::stringstream ss(arch);
  std::string token;
  std::size_t offset = 0;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    LayerSpec l = ParseLayer(token, default_linear);
    l.in_h = h, l.in_w = w, l.in_c = c;
    switch (l.kind) {
      case LayerKind::kConv3x3:
        l.out_h = h, l.out_w = w, l.out_c = l.units;
        l.weight_count = static_cast<std::size_t>(9) * c * l.units;
        l.bias_count = l.units;
        break;
      case LayerKind::kRelu:
        l.out_h = h, l.out_w = w, l.out_c = c;
        break;
      case LayerKind::kMaxPool2:
        if (h < 2 || w < 2) throw ConfigError("maxpool2 on a map smaller than 2x2");
        l.out_h = h / 2, l.out_w = w / 2, l.out_c = c;
        break;
      case LayerKind::kGlobalAvgPool:
        l.out_h = 1, l.out_w = 1, l.out_c = c;
        break;
      case LayerKind::kFlatten:
        l.out_h = 1, l.out_w = 1, l.out_c = h * w * c;
        break;
      case LayerKind::kLinear:
        if (h != 1 || w != 1) throw ConfigError("linear layer needs gap or flatten before it");
        l.out_h = 1, l.out_w = 1, l.out_c = l.units;
        l.weight_count = static_cast<std::size_t>(c) * l.units;
        l.bias_count = l.units;
        break;
    }
    l.param_offset = offset;
    offset += l.weight_count + l.bias_count;
    h = l.out_h, w = l.out_w, c = l.out_c;
    layers.push_back(l);
  }
  if (layers.empty() || layers.back().kind != LayerKind::kLinear) {
    throw ConfigError("model architecture must end with a linear layer");
  }
  *param_total = offset;
  return layers;
}

void ForwardSample(const std::vector<LayerSpec> &layers, std::span<const double> params,
                   std::span<const double> input, SampleTrace &trace) {
  trace.acts.resize(layers.size() + 1);
  trace.argmax.resize(layers.size());
  trace.acts[0].assign(input.begin(), input.end());
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const LayerSpec &l = layers[li];
    const std::vector<double> &in = trace.acts[li];
    std::vector<double> &out = trace.acts[li + 1];
    out.assign(static_cast<std::size_t>(l.out_h) * l.out_w * l.out_c, 0.0);
    const double *weights = params.data() + l.param_offset;
    const double *bias = weights + l.weight_count;
    switch (l.kind) {
      case LayerKind::kConv3x3: {
        const int ic_n = l.in_c, oc_n = l.out_c;
        for (int y = 0; y < l.out_h; ++y) {
          for (int x = 0; x < l.out_w; ++x) {
            double *o = &out[(static_cast<std::size_t>(y) * l.out_w + x) * oc_n];
            std::copy(bias, bias + oc_n, o);
            for (int ky = 0; ky < 3; ++ky) {
              const int sy = y + ky - 1;
              if (sy < 0 || sy >= l.in_h) continue;
              for (int kx = 0; kx < 3; ++kx) {
                const int sx = x + kx - 1;
                if (sx < 0 || sx >= l.in_w) continue;
                const double *src = &in[(static_cast<std::size_t>(sy) * l.in_w + sx) * ic_n];
                const double *wk = weights + static_cast<std::size_t>(ky * 3 + kx) * ic_n * oc_n;
                for (int ic = 0; ic < ic_n; ++ic) {
                  const double v = src[ic];
                  const double *wrow = wk + static_cast<std::size_t>(ic) * oc_n;
                  for (int oc = 0; oc < oc_n; ++oc) o[oc] += v * wrow[oc];
                }
              }
            }
          }
        }
        break;
      }
      case LayerKind::kRelu:
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = in[i] > 0.0 ? in[i] : 0.0;
        break;
      case LayerKind::kMaxPool2: {
        std::vector<int> &arg = trace.argmax[li];
        arg.assign(out.size(), 0);
        const int c_n = l.in_c;
        for (int y = 0; y < l.out_h; ++y) {
          for (int x = 0; x < l.out_w; ++x) {
            for (int c = 0; c < c_n; ++c) {
              int best = ((2 * y) * l.in_w + 2 * x) * c_n + c;
              for (int dy = 0; dy < 2; ++dy) {
                for (int dx = 0; dx < 2; ++dx) {
                  const int idx = ((2 * y + dy) * l.in_w + 2 * x + dx) * c_n + c;
                  if (in[idx] > in[best]) best = idx;
                }
              }
              const std::size_t o = (static_cast<std::size_t>(y) * l.out_w + x) * c_n + c;
              out[o] = in[best];
              arg[o] = best;
            }
          }
        }
        break;
      }
      case LayerKind::kGlobalAvgPool: {
        const int c_n = l.in_c;
        const std::size_t area = static_cast<std::size_t>(l.in_h) * l.in_w;
        for (std::size_t p = 0; p < area; ++p) {
          for (int c = 0; c < c_n; ++c) out[c] += in[p * c_n + c];
        }
        for (double &v : out) v /= static_cast<double>(area);
        break;
      }
      case LayerKind::kFlatten:
        out = in;
        break;
      case LayerKind::kLinear: {
        const int in_n = l.in_c;
        for (int o = 0; o < l.out_c; ++o) {
          const double *wrow = weights + static_cast<std::size_t>(o) * in_n;
          double s = bias[o];
          for (int i = 0; i < in_n; ++i) s += wrow[i] * in[i];
          out[o] = s;
        }
        break;
      }
    }
  }
}

void BackwardSample(const std::vector<LayerSpec> &layers, std::span<const double> params,
                    const SampleTrace &trace, std::span<const double> dlogits,
                    std::span<double> grad) {
  std::vector<double> dout(dlogits.begin(), dlogits.end());
  std::vector<double> din;
  for (std::size_t li = layers.size(); li-- > 0;) {
    const LayerSpec &l = layers[li];
    const std::vector<double> &in = trace.acts[li];
    const bool need_din = li > 0;
    din.assign(need_din ? in.size() : 0, 0.0);
    const double *weights = params.data() + l.param_offset;
    double *gw = grad.data() + l.param_offset;
    double *gb = gw + l.weight_count;
    switch (l.kind) {
      case LayerKind::kConv3x3: {
        const int ic_n = l.in_c, oc_n = l.out_c;
        for (int y = 0; y < l.out_h; ++y) {
          for (int x = 0; x < l.out_w; ++x) {
            const double *d = &dout[(static_cast<std::size_t>(y) * l.out_w + x) * oc_n];
            for (int oc = 0; oc < oc_n; ++oc) gb[oc] += d[oc];
            for (int ky = 0; ky < 3; ++ky) {
              const int sy = y + ky - 1;
              if (sy < 0 || sy >= l.in_h) continue;
              for (int kx = 0; kx < 3; ++kx) {
                const int sx = x + kx - 1;
                if (sx < 0 || sx >= l.in_w) continue;
                const std::size_t base = (static_cast<std::size_t>(sy) * l.in_w + sx) * ic_n;
                const std::size_t koff = static_cast<std::size_t>(ky * 3 + kx) * ic_n * oc_n;
                for (int ic = 0; ic < ic_n; ++ic) {
                  const double v = in[base + ic];
                  const double *wrow = weights + koff + static_cast<std::size_t>(ic) * oc_n;
                  double *gwrow = gw + koff + static_cast<std::size_t>(ic) * oc_n;
                  double s = 0.0;
                  for (int oc = 0; oc < oc_n; ++oc) {
                    gwrow[oc] += v * d[oc];
                    s += wrow[oc] * d[oc];
                  }
                  if (need_din) din[base + ic] += s;
                }
              }
            }
          }
        }
        break;
      }
      case LayerKind::kRelu:
        if (need_din) {
          for (std::size_t i = 0; i < in.size(); ++i) din[i] = in[i] > 0.0 ? dout[i] : 0.0;
        }
        break;
      case LayerKind::kMaxPool2:
        if (need_din) {
          const std::vector<int> &arg = trace.argmax[li];
          for (std::size_t o = 0; o < dout.size(); ++o) din[arg[o]] += dout[o];
        }
        break;
      case LayerKind::kGlobalAvgPool:
        if (need_din) {
          const int c_n = l.in_c;
          const std::size_t area = static_cast<std::size_t>(l.in_h) * l.in_w;
          for (std::size_t p = 0; p < area; ++p) {
            for (int c = 0; c < c_n; ++c) din[p * c_n + c] = dout[c] / static_cast<double>(area);
          }
        }
        break;
      case LayerKind::kFlatten:
        if (need_din) din = dout;
        break;
      case LayerKind::kLinear: {
        const int in_n = l.in_c;
        for (int o = 0; o < l.out_c; ++o) {
          const double *wrow = weights + static_cast<std::size_t>(o) * in_n;
          double *gwrow = gw + static_cast<std::size_t>(o) * in_n;
          gb[o] += dout[o];
          for (int i = 0; i < in_n; ++i) {
            gwrow[i] += dout[o] * in[i];
            if (need_din) din[i] += wrow[i] * dout[o];
          }
        }
        break;
      }
    }
    dout.swap(din);
  }
}

}  // namespace sra::internal
