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


#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "crldc/errors.hpp"
#include "crldc/inner_insdel.hpp"

namespace crldc {
namespace {

// Weight of every window of length w is at least 2/5 of w.
bool dense(const BitString& c, std::size_t w) {
  auto raw = c.raw();
  if (raw.size() < w) return true;
  std::size_t weight = 0;
  for (std::size_t p = 0; p < w; ++p) weight += raw[p];
  for (std::size_t s = 0;; ++s) {
    if (5 * weight < 2 * w) return false;
    if (s + w >= raw.size()) return true;
    weight += raw[s + w];
    weight -= raw[s];
  }
}

std::vector<std::uint8_t> unpack(const BitString& c) {
  return {c.raw().begin(), c.raw().end()};
}

BitString pack(const std::vector<std::uint8_t>& v) {
  BitString out(v.size());
  for (std::size_t p = 0; p < v.size(); ++p) out.set_bit(p + 1, v[p] != 0);
  return out;
}

// Applies `edits` random insertions/deletions, either clustered or spread.
BitString mutate(const BitString& c, std::size_t edits, bool burst,
                 std::mt19937_64& rng) {
  auto v = unpack(c);
  std::uniform_int_distribution<std::size_t> start(0, v.size() - 1);
  std::size_t anchor = start(rng);
  for (std::size_t e = 0; e < edits; ++e) {
    std::size_t at = burst ? std::min(anchor + e, v.size() - 1)
                           : std::uniform_int_distribution<std::size_t>(
                                 0, v.size() - 1)(rng);
    if (rng() & 1) {
      v.erase(v.begin() + static_cast<long>(at));
    } else {
      v.insert(v.begin() + static_cast<long>(at), static_cast<std::uint8_t>(rng() & 1));
    }
  }
  return pack(v);
}

TEST(InnerInsDelTest, DeskInstanceNumbers) {
  InnerInsDelCode code(394);
  EXPECT_EQ(code.codeword_len(), 3572u);
  EXPECT_EQ(code.edit_capacity(), 17u);
  EXPECT_EQ(code.rho_sz(), Rational(17, 7144));
  EXPECT_EQ(code.beta_sz(), Rational(197, 1786));
  EXPECT_EQ(code.density_window(), 18u);
  EXPECT_EQ(code.symbols(), 2 * 50u + 2);
}

TEST(InnerInsDelTest, RejectsOutOfRangeLengths) {
  EXPECT_THROW(InnerInsDelCode(7), TTooSmall);
  EXPECT_NO_THROW(InnerInsDelCode(8));
  EXPECT_NO_THROW(InnerInsDelCode(1008));
  EXPECT_THROW(InnerInsDelCode(1009), ParamMismatch);
}

TEST(InnerInsDelTest, EveryWindowIsDense) {
  std::mt19937_64 rng(10);
  for (std::size_t t : {8u, 9u, 16u, 64u, 394u, 1000u}) {
    InnerInsDelCode code(t);
    for (int trial = 0; trial < 20; ++trial) {
      BitString c = code.encode(random_bits(t, rng));
      ASSERT_EQ(c.size(), code.codeword_len());
      EXPECT_TRUE(dense(c, code.density_window())) << "t = " << t;
    }
    // All-zero and all-one messages are the usual worst cases.
    EXPECT_TRUE(dense(code.encode(BitString(t)), code.density_window()));
    EXPECT_TRUE(dense(code.encode(BitString(t, true)), code.density_window()));
  }
}

TEST(InnerInsDelTest, ExhaustiveSingleEditsAtTheSmallestLength) {
  InnerInsDelCode code(8);
  for (std::uint64_t m = 0; m < 256; m += 5) {
    BitString msg = BitString::from_uint(m, 8);
    auto c = unpack(code.encode(msg));
    for (std::size_t at = 0; at <= c.size(); ++at) {
      if (at < c.size()) {
        auto del = c;
        del.erase(del.begin() + static_cast<long>(at));
        auto got = code.decode(pack(del));
        ASSERT_TRUE(got && *got == msg) << "deletion at " << at;
      }
      for (std::uint8_t b : {0, 1}) {
        auto ins = c;
        ins.insert(ins.begin() + static_cast<long>(at), b);
        auto got = code.decode(pack(ins));
        ASSERT_TRUE(got && *got == msg) << "insertion at " << at;
      }
    }
  }
}

TEST(InnerInsDelTest, RecoversFromEditsUpToCapacity) {
  std::mt19937_64 rng(11);
  for (std::size_t t : {16u, 394u}) {
    InnerInsDelCode code(t);
    for (int trial = 0; trial < 150; ++trial) {
      BitString m = random_bits(t, rng);
      BitString c = code.encode(m);
      BitString y = mutate(c, code.edit_capacity(), trial % 2 == 0, rng);
      auto got = code.decode(y);
      ASSERT_TRUE(got) << "t = " << t << " trial " << trial;
      EXPECT_EQ(*got, m);
    }
  }
}

TEST(InnerInsDelTest, BufferOnlyWordsDecodeToBottom) {
  InnerInsDelCode code(394);
  EXPECT_FALSE(code.decode(BitString(3572)));
  EXPECT_FALSE(code.decode(BitString()));
}

}  // namespace
}  // namespace crldc
