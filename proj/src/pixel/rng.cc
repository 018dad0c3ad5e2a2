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

#include "sra/rng.h"

#include <cmath>
#include <numbers>

namespace sra {

double Stream::Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

uint64_t Stream::UniformInt(uint64_t bound) {
  if (bound <= 1) return 0;
  // Largest multiple of bound representable; draws above it are rejected.
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % bound;
  uint64_t draw = Next();
  while (draw >= limit) draw = Next();
  return draw % bound;
}

double Stream::Normal() {
  // 1 - U keeps the log argument in (0, 1].
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Stream Stream::Fork(uint64_t tag) {
  return Stream(Mix64(Next() ^ Mix64(tag + 0x632be59bd9b4e019ull)));
}

Stream DeriveStream(uint64_t seed, uint64_t epoch, uint64_t iteration,
                    uint64_t sample_index, uint64_t purpose_tag) {
  uint64_t h = Mix64(seed + 0x9e3779b97f4a7c15ull);
  h = Mix64(h ^ (epoch + 0xd1b54a32d192ed03ull));
  h = Mix64(h ^ (iteration + 0x8cb92ba72f3d8dd7ull));
  h = Mix64(h ^ (sample_index + 0xaef17502108ef2d9ull));
  h = Mix64(h ^ (purpose_tag + 0xf1357aea2e62a9c5ull));
  return Stream(h);
}

}  // namespace sra
