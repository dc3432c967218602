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

#include <array>
#include <cstdint>

namespace crldc::gf256 {

// Arithmetic in GF(2^8) with primitive polynomial x^8 + x^4 + x^3 + x^2 + 1.
struct Tables {
  std::array<std::uint8_t, 512> exp{};
  std::array<std::uint16_t, 256> log{};
  std::array<std::array<std::uint8_t, 256>, 256> product{};
};

const Tables& tables();

inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  return tables().product[a][b];
}

std::uint8_t div(std::uint8_t a, std::uint8_t b);
std::uint8_t inv(std::uint8_t a);
// alpha^e for any integer e (reduced mod 255).
std::uint8_t alpha_pow(long e);

}  // namespace crldc::gf256
