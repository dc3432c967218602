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
#include <cstdint>
#include <initializer_list>

namespace crldc {

// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct WilsonInterval {
  double low = 0;
  double high = 1;
};

// Wilson score interval for successes / trials. trials == 0 gives [0, 1].
WilsonInterval wilson_interval(std::size_t successes, std::size_t trials,
                               double z = kZ99);

// Deterministic child seed from a master seed and a path of tags
// (SplitMix64 finalizer folded over the tags).
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path);

}  // namespace crldc
