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

#include "crldc/adversaries.hpp"
#include "crldc/errors.hpp"
#include "crldc/insdel_crldc.hpp"
#include "crldc/insdel_params.hpp"

namespace crldc {
namespace {

InsDelParams desk() {
  InsDelOptions options;
  options.buffer_len = kDeskBufferLen;
  return make_insdel_params(128, 1024, 128, Rational(1, 10), 2.0 / 3.0, options);
}

TEST(InsDelParamsTest, ClosedFormsAtRhoSzOneTwentiethBetaSzOneHalf) {
  // Frozen from an independent exact-fraction evaluation.
  InsDelParams p = compute_insdel_params(128, 1024, 128, Rational(1, 20),
                                         Rational(1, 2), Rational(1, 10),
                                         2.0 / 3.0);
  EXPECT_EQ(p.gamma, Rational(1, 12));
  EXPECT_EQ(p.alpha, Rational(1, 730));
  EXPECT_EQ(p.alpha, Rational(2, 73) * p.rho_sz);
  EXPECT_EQ(p.beta, Rational(731, 365));
  EXPECT_EQ(p.beta, Rational(4, 73) * p.rho_sz + 1 / p.beta_sz);
  EXPECT_EQ(p.rho, Rational(87709, 6771036624LL));
  EXPECT_EQ(p.delta, Rational(105264, 192973));
  EXPECT_EQ(p.delta,
            p.beta / (2 * (1 - p.gamma) * (p.beta - p.alpha * p.gamma)));
  EXPECT_EQ(p.delta + 2 * p.beta * p.rho / (p.gamma * p.alpha), 1);
  EXPECT_EQ(p.q_lower, Rational(298237, 421056));
  EXPECT_EQ(p.mu, 48u);
}

TEST(InsDelParamsTest, DeskNumbers) {
  InsDelParams p = desk();
  EXPECT_EQ(p.tau, 394u);  // 3 * 128 + 10
  EXPECT_EQ(p.index_bits, 10u);
  EXPECT_EQ(p.core_len, 3572u);
  EXPECT_EQ(p.buffer_len, 72u);
  EXPECT_EQ(p.block_len, 3716u);
  EXPECT_EQ(p.K, 29728u);
  EXPECT_EQ(p.window, 18u);
  EXPECT_EQ(p.alpha, Rational(36, 197));
  EXPECT_EQ(p.beta, Rational(1858, 197));
  EXPECT_EQ(p.rho, Rational(27771, 75824980));
  EXPECT_EQ(p.delta, Rational(11148, 20405));
  EXPECT_EQ(p.mu, 48u);
  EXPECT_EQ(p.beta, 2 * p.alpha + 1 / p.beta_sz);
}

TEST(InsDelParamsTest, RhoIncreasesWithRhoSz) {
  Rational last = -1;
  for (int s = 1; s <= 20; ++s) {
    InsDelParams p = compute_insdel_params(128, 1024, 128, Rational(s, 21),
                                           Rational(1, 2), Rational(1, 10), 0.5);
    EXPECT_GT(p.rho, last) << "rho_sz = " << s << "/21";
    last = p.rho;
  }
}

TEST(InsDelParamsTest, RejectsBadInputs) {
  EXPECT_THROW(make_insdel_params(128, 1024, 128, Rational(1, 3), 0.5), InvalidParam);
  EXPECT_THROW(make_insdel_params(128, 1024, 128, Rational(0), 0.5), InvalidParam);
  InsDelOptions full;
  full.operating_fraction = 1;  // q degenerates to 1/2
  EXPECT_THROW(make_insdel_params(128, 1024, 128, Rational(1, 10), 2.0 / 3.0, full),
               InfeasibleTarget);
  EXPECT_THROW(make_insdel_params(128, 1024, 128, Rational(1, 10), 0.95),
               InfeasibleTarget);
}

class InsDelCodeTest : public ::testing::Test {
 protected:
  InsDelCodeTest()
      : scheme_(make_signature_scheme("schnorr", 128)), code_(desk(), *scheme_) {
    std::mt19937_64 rng(1);
    x_ = random_bits(1024, rng);
    enc_ = code_.encode(x_, rng);
  }
  std::unique_ptr<SignatureScheme> scheme_;
  InsDelCode code_;
  BitString x_;
  InsDelEncoding enc_;
};

TEST_F(InsDelCodeTest, BlocksAreBufferedCores) {
  const auto& P = code_.params();
  ASSERT_EQ(enc_.codeword.size(), P.K);
  for (std::size_t j = 1; j <= P.d; ++j) {
    const auto [first, last] = enc_.blocks[j - 1];
    EXPECT_EQ(last - first + 1, P.block_len);
    EXPECT_EQ(enc_.codeword.slice(first, first + P.buffer_len - 1).weight(), 0u);
    EXPECT_EQ(enc_.codeword.slice(last - P.buffer_len + 1, last).weight(), 0u);
    EXPECT_EQ(enc_.payloads[j - 1].index, j);
  }
}

TEST_F(InsDelCodeTest, BlockDecOnCleanWordsIsExact) {
  const auto& P = code_.params();
  for (std::size_t i = 1; i <= P.K; i += 37) {
    ReceivedWordOracle o(enc_.codeword);
    auto got = code_.block_dec(o, i, 0);
    ASSERT_TRUE(got) << "position " << i;
    EXPECT_EQ(*got, enc_.payloads[(i - 1) / P.block_len]);
  }
  ReceivedWordOracle o(enc_.codeword);
  EXPECT_THROW(code_.block_dec(o, 0, 0), OutOfRange);
  EXPECT_THROW(code_.block_dec(o, P.K + 1, 0), OutOfRange);
}

TEST_F(InsDelCodeTest, BlockDecInsideAZeroedBlockIsBottom) {
  const auto& P = code_.params();
  BitString w = enc_.codeword;
  for (std::size_t p = 2 * P.block_len + 1; p <= 3 * P.block_len; ++p) {
    w.set_bit(p, false);
  }
  ReceivedWordOracle o(w);
  EXPECT_FALSE(code_.block_dec(o, 2 * P.block_len + P.block_len / 2, 0));
}

TEST_F(InsDelCodeTest, NbsFindsEveryBlockOfACleanWord) {
  for (std::size_t j = 1; j <= code_.params().d; ++j) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      ReceivedWordOracle o(enc_.codeword);
      auto got = code_.nbs(o, j, seed);
      ASSERT_TRUE(got);
      EXPECT_EQ(*got, enc_.payloads[j - 1]);
    }
  }
  ReceivedWordOracle o(enc_.codeword);
  EXPECT_THROW(code_.nbs(o, 0, 0), OutOfRange);
}

TEST_F(InsDelCodeTest, CleanDecodeIsPerfect) {
  for (std::size_t i = 1; i <= 1024; i += 41) {
    ReceivedWordOracle o(enc_.codeword);
    DecodeOutcome out = code_.decode(o, i, i);
    ASSERT_TRUE(out.value) << out.detail;
    EXPECT_EQ(*out.value, x_.bit(i));
    EXPECT_LE(static_cast<double>(out.queries_used),
              code_.decode_query_bound(enc_.codeword.size()));
  }
}

TEST_F(InsDelCodeTest, RotationDefeatsPositionalButNotSearchDecoding) {
  const auto& P = code_.params();
  AttackResult a = rotation_insdel(enc_.codeword, P.block_len,
                                   Rational(BigInt(P.block_len), BigInt(P.K)));
  EXPECT_EQ(a.word.size(), enc_.codeword.size());
  std::size_t search_ok = 0;
  for (std::size_t i = 1; i <= 1024; i += 64) {
    ReceivedWordOracle o1(a.word);
    DecodeOutcome full = code_.decode(o1, i, i);
    if (full.value) {
      EXPECT_EQ(*full.value, x_.bit(i));
      ++search_ok;
    }
    ReceivedWordOracle o2(a.word);
    EXPECT_FALSE(code_.decode_positional(o2, i, i).value);
  }
  // Blocks 1..d-1 survive the rotation intact.
  EXPECT_GE(search_ok, 14u);
}

TEST_F(InsDelCodeTest, EmptyWordsDecodeToBottom) {
  ReceivedWordOracle o{BitString()};
  DecodeOutcome out = code_.decode(o, 1, 0);
  EXPECT_FALSE(out.value);
  EXPECT_EQ(out.detail, "empty-word");
}

}  // namespace
}  // namespace crldc
