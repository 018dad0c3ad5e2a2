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

#include <bit>
#include <cstring>
#include <string_view>

#include "sra/error.h"
#include "sra/model.h"

namespace sra {
namespace {

constexpr std::string_view kMagic = "SRACKPT1";

static_assert(std::endian::native == std::endian::little,
              "checkpoint I/O assumes a little-endian host");

void PutU64(std::vector<uint8_t> &out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void PutF32s(std::vector<uint8_t> &out, std::span<const double> values) {
  PutU64(out, values.size());
  for (double v : values) {
    const auto bits = std::bit_cast<uint32_t>(static_cast<float>(v));
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(bits >> (8 * i)));
  }
}

class Reader {
 public:
  explicit Reader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  std::span<const uint8_t> Take(std::size_t n) {
    if (bytes_.size() - pos_ < n) throw MalformedInput("checkpoint is truncated");
    auto s = bytes_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  uint64_t U64() {
    const auto s = Take(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(s[i]) << (8 * i);
    return v;
  }
  std::vector<double> F32s() {
    const uint64_t n = U64();
    if (n > (bytes_.size() - pos_) / 4) throw MalformedInput("checkpoint is truncated");
    const auto s = Take(n * 4);
    std::vector<double> out(n);
    for (uint64_t i = 0; i < n; ++i) {
      uint32_t bits = 0;
      for (int b = 0; b < 4; ++b) bits |= static_cast<uint32_t>(s[4 * i + b]) << (8 * b);
      out[i] = std::bit_cast<float>(bits);
    }
    return out;
  }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::span<const uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<uint8_t> SaveCheckpoint(const Model &model, const OptimState &optim) {
  std::vector<uint8_t> out(kMagic.begin(), kMagic.end());
  PutU64(out, model.descriptor().size());
  out.insert(out.end(), model.descriptor().begin(), model.descriptor().end());
  PutF32s(out, model.params());
  PutF32s(out, optim.velocity);
  return out;
}

Checkpoint LoadCheckpoint(std::span<const uint8_t> bytes) {
  Reader r(bytes);
  const auto magic = r.Take(kMagic.size());
  if (std::memcmp(magic.data(), kMagic.data(), kMagic.size()) != 0) {
    throw MalformedInput("not a checkpoint (bad magic)");
  }
  const uint64_t len = r.U64();
  if (len > bytes.size()) throw MalformedInput("checkpoint is truncated");
  const auto desc = r.Take(len);
  Checkpoint ck{Model(std::string(desc.begin(), desc.end())), {}};
  const std::vector<double> params = r.F32s();
  if (params.size() != ck.model.param_count()) {
    throw MalformedInput("checkpoint parameter count does not match its architecture");
  }
  std::copy(params.begin(), params.end(), ck.model.params().begin());
  ck.velocity = r.F32s();
  if (!ck.velocity.empty() && ck.velocity.size() != params.size()) {
    throw MalformedInput("checkpoint momentum size does not match parameters");
  }
  if (!r.done()) throw MalformedInput("trailing bytes after checkpoint");
  return ck;
}

}  // namespace sra
