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

#include <cstdio>

#include "sra/trainer.h"

namespace sra {
namespace {

std::string Fmt(const char *format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string Optional(const std::optional<double> &v, const char *format) {
  return v ? Fmt(format, *v) : std::string();
}

}  // namespace

std::string FormatMetricsRow(const MetricsRecord &r) {
  return std::to_string(r.epoch) + "," + Fmt("%.8f", r.explore_loss) + "," +
         Fmt("%.8f", r.refine_loss) + "," + Optional(r.mean_mis, "%.8f") + "," +
         Fmt("%.10g", r.lr) + "," + Optional(r.test_acc, "%.6f") + "," +
         Optional(r.seconds, "%.3f");
}

}  // namespace sra
