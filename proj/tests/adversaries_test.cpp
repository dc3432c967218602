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
#include "crldc/hamming_crldc.hpp"

namespace crldc {
namespace {

HammingParams hamming_params(std::size_t k) {
  return compute_hamming_params(128, k, 128, 128, Rational(1, 4), 2.0 / 3.0,
                                Rational(1, 4));
}

TEST(RandomHammingTest, ExactFlipCount) {
  std::mt19937_64 rng(1);
  BitString c = random_bits(12384, rng);
  EXPECT_EQ(random_hamming_channel(c, Rational(0), 1).word, c);
  AttackResult a = random_hamming_channel(c, Rational(1, 100), 2);
  EXPECT_EQ(a.distance.raw, 123u);
  EXPECT_EQ(a.distance.normalized, Rational(123, 12384));
  EXPECT_EQ(a.metric, Metric::kHamming);
  EXPECT_THROW(random_hamming_channel(c, Rational(3, 2), 2), InvalidParam);
}

TEST(RandomInsDelTest, BudgetAndIdentity) {
  std::mt19937_64 rng(2);
  BitString c = random_bits(3000, rng);
  EXPECT_EQ(random_insdel_channel(c, Rational(0), 1).word, c);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    AttackResult a = random_insdel_channel(c, Rational(1, 200), seed);
    EXPECT_LE(a.distance.raw, 30u);
    EXPECT_LE(a.distance.normalized, Rational(1, 200));
    EXPECT_EQ(a.metric, Metric::kEdit);
  }
}

TEST(RandomInsDelTest, DeletionsOnlyScriptBound) {
  std::mt19937_64 rng(3);
  BitString c = random_bits(200, rng);
  BitString t = c;
  for (int e = 0; e < 9; ++e) t = t.slice(2, t.size());
  EXPECT_LE(edit_distance(c, t).normalized, Rational(9, 400));
}

class HammingAttackTest : public ::testing::Test {
 protected:
  HammingAttackTest() : scheme_(make_signature_scheme("schnorr", 128)) {}
  std::unique_ptr<SignatureScheme> scheme_;
};

TEST_F(HammingAttackTest, WorstBlockDestroysWhatTheBudgetPaysFor) {
  HammingParams p = hamming_params(1024);
  HammingCode code(p, *scheme_);
  std::mt19937_64 rng(4);
  HammingEncoding e = code.encode(random_bits(1024, rng), rng);
  AttackResult a = worst_block_hamming(e.codeword, p.rho, code, 5);
  // floor(rho K) = 144 flips buy one block at 73 flips, not floor(c d) = 2.
  EXPECT_EQ(a.distance.raw, 73u);
  std::size_t destroyed = 0;
  for (std::size_t j = 1; j <= p.d; ++j) {
    bool ok = false;
    code.inner().decode(a.word.slice((j - 1) * p.bl + 1, j * p.bl), ok);
    destroyed += !ok;
  }
  EXPECT_EQ(destroyed, 1u);
  // At d = 128, floor(c d) = 32 but floor(rho K) = 2304 flips buy 31 blocks.
  HammingParams big = hamming_params(16384);
  HammingCode big_code(big, *scheme_);
  HammingEncoding f = big_code.encode(random_bits(16384, rng), rng);
  AttackResult b = worst_block_hamming(f.codeword, big.rho, big_code, 6);
  EXPECT_EQ(b.distance.raw, 31 * (big.inner_radius + 1));
}

TEST_F(HammingAttackTest, StrawmanNeedsOneBlockOfBudget) {
  HammingParams p = hamming_params(1024);
  HammingCode code(p, *scheme_);
  std::mt19937_64 rng(7);
  HammingEncoding e = code.encode(random_bits(1024, rng), rng);
  EXPECT_THROW(strawman_key_substitution(e.codeword, e, code, p.rho, 1),
               BudgetExceeded);
}

TEST_F(HammingAttackTest, StrawmanRewritesOnlyBlockOne) {
  HammingParams p = hamming_params(16384);
  HammingCode code(p, *scheme_);
  std::mt19937_64 rng(8);
  HammingEncoding e = code.encode(random_bits(16384, rng), rng);
  AttackResult a = strawman_key_substitution(e.codeword, e, code, p.rho, 1);
  EXPECT_LE(a.distance.normalized, p.rho);
  SignedBlockPayload forged = code.read_block(a.word, 1);
  EXPECT_EQ(forged.x_block, e.payloads[0].x_block.complement());
  EXPECT_NE(forged.pk, e.pk);
  EXPECT_EQ(a.word.slice(p.bl + 1, p.K), e.codeword.slice(p.bl + 1, p.K));
}

TEST_F(HammingAttackTest, SwapExchangesTwoBlocks) {
  HammingParams p = hamming_params(16384);
  HammingCode code(p, *scheme_);
  std::mt19937_64 rng(9);
  HammingEncoding e = code.encode(random_bits(16384, rng), rng);
  AttackResult a = swap_blocks_hamming(e.codeword, code, p.rho, 3);
  std::vector<std::size_t> changed;
  for (std::size_t j = 1; j <= p.d; ++j) {
    if (a.word.slice((j - 1) * p.bl + 1, j * p.bl) !=
        e.codeword.slice((j - 1) * p.bl + 1, j * p.bl)) {
      changed.push_back(j);
    }
  }
  ASSERT_EQ(changed.size(), 2u);
  EXPECT_EQ(code.read_block(a.word, changed[0]).index, changed[1]);
}

TEST(RotationTest, WrapsHalfOfTheLastBlock) {
  BitString c = BitString::from_string("000011110000111100001111");
  AttackResult a = rotation_insdel(c, 8, Rational(1, 3));
  EXPECT_EQ(a.word.size(), c.size());
  EXPECT_EQ(a.word.to_string(), "111100001111000011110000");
  EXPECT_LE(a.distance.raw, 2u * 8);
  EXPECT_THROW(rotation_insdel(c, 8, Rational(1, 100)), BudgetExceeded);
  EXPECT_THROW(rotation_insdel(c, 7, Rational(1, 2)), ParamMismatch);
}

TEST(BudgetAuditTest, CountsChecksAndViolations) {
  reset_budget_audit();
  BitString c = BitString::from_string("0011001100110011");
  random_hamming_channel(c, Rational(1, 4), 1);
  EXPECT_THROW(rotation_insdel(c, 4, Rational(0)), BudgetExceeded);
  BudgetAudit audit = budget_audit();
  EXPECT_EQ(audit.checks, 2u);
  EXPECT_EQ(audit.violations, 1u);
  reset_budget_audit();
}

TEST(RegistryTest, RunsAttacksByName) {
  BitString c = BitString::from_string("0011001100110011");
  AttackContext ctx;
  ctx.codeword = &c;
  ctx.rho = Rational(1, 4);
  ctx.seed = 4;
  EXPECT_EQ(run_attack("none", ctx).word, c);
  EXPECT_EQ(run_attack("random-hamming", ctx).distance.raw, 4u);
  EXPECT_THROW(run_attack("worst-block", ctx), ConfigInvalid);
  EXPECT_THROW(run_attack("rotation", ctx), ConfigInvalid);
  EXPECT_THROW(run_attack("no-such-attack", ctx), ConfigInvalid);
  EXPECT_EQ(attack_names().size(), 7u);
}

}  // namespace
}  // namespace crldc
