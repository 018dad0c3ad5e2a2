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

#include <cmath>
#include <numbers>

#include "sra/error.h"
#include "sra/model.h"

namespace sra {

void SgdStep(Model &model, OptimState &optim, std::span<const double> grad, double lr) {
  auto params = model.params();
  Expect(grad.size() == params.size(), "sgd_step: gradient size mismatch");
  if (optim.velocity.empty()) optim.velocity.assign(params.size(), 0.0);
  Expect(optim.velocity.size() == params.size(), "sgd_step: momentum buffer size mismatch");
  for (std::size_t i = 0; i < params.size(); ++i) {
    double &v = optim.velocity[i];
    v = optim.momentum * v + grad[i] + optim.weight_decay * params[i];
    params[i] -= lr * v;
  }
}

double LrAt(const LrSchedule &schedule, int64_t global_iter) {
  const int64_t warmup = schedule.warmup_iters();
  const int64_t total = schedule.total_iters();
  if (global_iter < 0) return 0.0;
  if (global_iter < warmup) {
    return schedule.base_lr * static_cast<double>(global_iter) / static_cast<double>(warmup);
  }
  // t runs from 0 on the first post-warmup update to 1 on the last update.
  const int64_t span = std::max<int64_t>(1, total - warmup - 1);
  const double t = std::min(1.0, static_cast<double>(global_iter - warmup) / span);
  return schedule.base_lr * 0.5 * (1.0 + std::cos(std::numbers::pi * t));
}

}  // namespace sra
