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

#include "crldc/gf256.hpp"

#include "crldc/errors.hpp"

namespace crldc::gf256 {

namespace {

Tables build() {
  Tables t;
  unsigned x = 1;
  for (int i = 0; i < 255; ++i) {
    t.exp[i] = static_cast<std::uint8_t>(x);
    t.log[x] = static_cast<std::uint16_t>(i);
    x <<= 1;
    if (x & 0x100) x ^= 0x11d;
  }
  for (int i = 255; i < 512; ++i) t.exp[i] = t.exp[i - 255];
  for (int a = 1; a < 256; ++a) {
    for (int b = 1; b < 256; ++b) t.product[a][b] = t.exp[t.log[a] + t.log[b]];
  }
  return t;
}

}  // namespace

const Tables& tables() {
  static const Tables t = build();
  return t;
}

std::uint8_t div(std::uint8_t a, std::uint8_t b) {
  if (b == 0) throw InvalidParam("GF(256) division by zero");
  if (a == 0) return 0;
  const Tables& t = tables();
  return t.exp[(t.log[a] + 255 - t.log[b]) % 255];
}

std::uint8_t inv(std::uint8_t a) { return div(1, a); }

std::uint8_t alpha_pow(long e) {
  long r = e % 255;
  if (r < 0) r += 255;
  return tables().exp[static_cast<std::size_t>(r)];
}

}  // namespace crldc::gf256
