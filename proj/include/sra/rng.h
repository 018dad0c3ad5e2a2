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

#include <cstdint>
#include <limits>

namespace sra {

// SplitMix64 finalizer: a bijective avalanche mix of 64 bits.
constexpr uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic SplitMix64 stream. Every draw is a pure function of
// (key, position), so results never depend on the platform's <random>.
class Stream {
 public:
  using result_type = uint64_t;

  explicit Stream(uint64_t key = 0) : state_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<uint64_t>::max(); }

  uint64_t operator()() { return Next(); }
  uint64_t Next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return Mix64(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform integer on [0, bound). Unbiased (rejection sampling).
  uint64_t UniformInt(uint64_t bound);
  bool Bernoulli(double p) { return Uniform() < p; }
  // Standard normal via Box-Muller; consumes two draws.
  double Normal();

  // Child stream keyed from one draw of this stream and a tag.
  Stream Fork(uint64_t tag);

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

enum class StreamPurpose : uint64_t {
  kInit = 1,
  kShuffle = 2,
  kExplore = 3,
  kRefine = 4,
  kBaseline = 5,
  kAugmentTool = 6,
  kData = 7,
};

// Independent stream for one (seed, epoch, iteration, sample, purpose) tuple.
Stream DeriveStream(uint64_t seed, uint64_t epoch, uint64_t iteration,
                    uint64_t sample_index, uint64_t purpose_tag);

inline Stream DeriveStream(uint64_t seed, uint64_t epoch, uint64_t iteration,
                           uint64_t sample_index, StreamPurpose purpose) {
  return DeriveStream(seed, epoch, iteration, sample_index,
                      static_cast<uint64_t>(purpose));
}

}  // namespace sra
