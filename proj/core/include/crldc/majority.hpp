// Copyright 2026 The crldc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crldc/bitstring.hpp"

namespace crldc {

struct MajorityResult {
  std::optional<BitString> value;  // nullopt is the bottom symbol
  std::size_t votes = 0;
  bool tie = false;
};

// Plurality over values where nullopt stands for bottom. Returns the most
// frequent non-bottom value, breaking ties toward the lexicographically
// smallest; returns bottom only when bottom is strictly most frequent.
// Throws EmptyList.
MajorityResult majority(const std::vector<std::optional<BitString>>& values);

}  // namespace crldc
