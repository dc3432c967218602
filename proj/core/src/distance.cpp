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

#include "crldc/distance.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "crldc/errors.hpp"

namespace crldc {

std::string to_string(Metric metric) {
  return metric == Metric::kHamming ? "HAM" : "ED";
}

DistanceReport hamming_distance(const BitString& u, const BitString& v) {
  if (u.size() != v.size()) {
    throw LengthMismatch("hamming_distance on lengths " +
                         std::to_string(u.size()) + " and " +
                         std::to_string(v.size()));
  }
  auto a = u.raw();
  auto b = v.raw();
  std::size_t flips = 0;
  for (std::size_t k = 0; k < a.size(); ++k) flips += a[k] != b[k];
  DistanceReport r;
  r.metric = Metric::kHamming;
  r.raw = flips;
  r.normalized = u.empty() ? Rational(0)
                           : Rational(BigInt(flips), BigInt(u.size()));
  return r;
}

// Hyyro's bit-vector LCS: each character of the outer string updates a
// column vector V over the inner string; LCS is the number of zero bits.
std::size_t lcs_length(const BitString& u, const BitString& v) {
  const BitString& inner = u.size() <= v.size() ? u : v;
  const BitString& outer = u.size() <= v.size() ? v : u;
  const std::size_t m = inner.size();
  if (m == 0) return 0;
  const std::size_t words = (m + 63) / 64;
  std::vector<std::uint64_t> match[2] = {std::vector<std::uint64_t>(words, 0),
                                         std::vector<std::uint64_t>(words, 0)};
  auto in = inner.raw();
  for (std::size_t k = 0; k < m; ++k) {
    match[in[k]][k / 64] |= std::uint64_t{1} << (k % 64);
  }
  std::vector<std::uint64_t> vec(words, ~std::uint64_t{0});
  for (std::uint8_t ch : outer.raw()) {
    const auto& mw = match[ch];
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t x = vec[w];
      std::uint64_t y = x & mw[w];
      std::uint64_t sum = x + y;
      std::uint64_t c1 = sum < x;
      std::uint64_t sum2 = sum + carry;
      std::uint64_t c2 = sum2 < sum;
      carry = c1 | c2;
      vec[w] = sum2 | (x - y);
    }
  }
  std::size_t ones = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = vec[w];
    if (w == words - 1 && m % 64 != 0) {
      word |= ~std::uint64_t{0} << (m % 64);
    }
    ones += static_cast<std::size_t>(std::popcount(word));
  }
  return words * 64 - ones;
}

std::size_t raw_edit_distance(const BitString& u, const BitString& v) {
  return u.size() + v.size() - 2 * lcs_length(u, v);
}

DistanceReport edit_distance(const BitString& u, const BitString& v) {
  DistanceReport r;
  r.metric = Metric::kEdit;
  r.raw = raw_edit_distance(u, v);
  std::size_t denom = 2 * std::max(u.size(), v.size());
  r.normalized = denom == 0 ? Rational(0)
                            : Rational(BigInt(r.raw), BigInt(denom));
  return r;
}

}  // namespace crldc
