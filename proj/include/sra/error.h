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

#include <stdexcept>
#include <string>

namespace sra {

// Input bytes or files that do not follow the expected layout.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structurally valid record carrying an impossible value (e.g. label out of range).
class CorruptRecord : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Bad configuration key, value, or combination.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void Expect(bool condition, const std::string &what) {
  if (!condition) throw ContractViolation(what);
}

}  // namespace sra
