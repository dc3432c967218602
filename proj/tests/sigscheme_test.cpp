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

#include "crldc/errors.hpp"
#include "crldc/forgery.hpp"
#include "crldc/sigscheme.hpp"

namespace crldc {
namespace {

class SchnorrTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SchnorrTest, SignaturesVerifyAndHaveFixedLength) {
  auto scheme = make_signature_scheme("schnorr", GetParam());
  EXPECT_EQ(scheme->sig_len(), GetParam());
  EXPECT_EQ(scheme->pk_len(), GetParam());
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 40; ++t) {
    SignatureKeyPair keys = scheme->gen(rng);
    ASSERT_EQ(keys.pk.size(), scheme->pk_len());
    std::uniform_int_distribution<std::size_t> len(0, 300);
    BitString m = random_bits(len(rng), rng);
    BitString sigma = scheme->sign(keys.sk, m);
    ASSERT_EQ(sigma.size(), scheme->sig_len());
    EXPECT_TRUE(scheme->verify(keys.pk, m, sigma));
    // Deterministic verification and signing.
    EXPECT_TRUE(scheme->verify(keys.pk, m, sigma));
    EXPECT_EQ(scheme->sign(keys.sk, m), sigma);
  }
}

TEST_P(SchnorrTest, RejectsTamperedInputs) {
  auto scheme = make_signature_scheme("schnorr", GetParam());
  std::mt19937_64 rng(17);
  SignatureKeyPair keys = scheme->gen(rng);
  SignatureKeyPair other = scheme->gen(rng);
  BitString m = random_bits(100, rng);
  BitString sigma = scheme->sign(keys.sk, m);
  BitString m2 = m;
  m2.flip(5);
  EXPECT_FALSE(scheme->verify(keys.pk, m2, sigma));
  EXPECT_FALSE(scheme->verify(other.pk, m, sigma));
  // The message length is bound into the hash.
  EXPECT_FALSE(scheme->verify(keys.pk, m + BitString(1), sigma));
  for (std::size_t b = 1; b <= sigma.size(); b += 7) {
    BitString s2 = sigma;
    s2.flip(b);
    EXPECT_FALSE(scheme->verify(keys.pk, m, s2)) << "flipped bit " << b;
  }
  EXPECT_FALSE(scheme->verify(BitString(scheme->pk_len()), m, sigma));
  EXPECT_FALSE(scheme->verify(BitString(scheme->pk_len(), true), m, sigma));
}

TEST_P(SchnorrTest, WrongLengthsAreMalformed) {
  auto scheme = make_signature_scheme("schnorr", GetParam());
  std::mt19937_64 rng(1);
  SignatureKeyPair keys = scheme->gen(rng);
  BitString m = random_bits(10, rng);
  BitString sigma = scheme->sign(keys.sk, m);
  EXPECT_THROW(scheme->verify(keys.pk + BitString(1), m, sigma), MalformedInput);
  EXPECT_THROW(scheme->verify(keys.pk, m, sigma.slice(1, sigma.size() - 1)),
               MalformedInput);
}

INSTANTIATE_TEST_SUITE_P(Lambdas, SchnorrTest, ::testing::Values(64, 128, 256));

TEST(SchnorrFactoryTest, UnknownNamesAndLambdas) {
  EXPECT_THROW(make_signature_scheme("schnorr", 100), UnsupportedLambda);
  EXPECT_THROW(make_signature_scheme("rsa", 128), InvalidParam);
}

TEST(SchnorrFactoryTest, KeyGenerationIsSeeded) {
  auto scheme = make_signature_scheme("schnorr", 64);
  std::mt19937_64 a(5), b(5), c(6);
  EXPECT_EQ(scheme->gen(a).pk, scheme->gen(b).pk);
  std::mt19937_64 a2(5);
  EXPECT_NE(scheme->gen(a2).pk, scheme->gen(c).pk);
}

TEST(ForgeryGameTest, ShippedAdversariesNeverWin) {
  auto scheme = make_signature_scheme("schnorr", 64);
  auto adversaries = shipped_forgery_adversaries(*scheme);
  ASSERT_EQ(adversaries.size(), 4u);
  for (auto& adv : adversaries) {
    ForgeryGameResult r = run_forgery_game(*scheme, *adv, 100, 42);
    EXPECT_EQ(r.trials, 100u);
    EXPECT_EQ(r.wins, 0u) << adv->name();
    EXPECT_EQ(r.win_rate, 0);
  }
}

TEST(ForgeryGameTest, ReplaysVerifyButAreDisqualified) {
  auto scheme = make_signature_scheme("schnorr", 64);
  ReplayAdversary replay;
  ForgeryGameResult r = run_forgery_game(*scheme, replay, 50, 1);
  EXPECT_EQ(r.verified, 50u);
  EXPECT_EQ(r.wins, 0u);
}

TEST(ForgeryGameTest, HonestSignerControlAlwaysWins) {
  // Sanity check of the game itself: a party holding sk wins every trial.
  auto scheme = make_signature_scheme("schnorr", 64);
  HonestSignerAdversary honest(*scheme);
  ForgeryGameResult r = run_forgery_game(*scheme, honest, 50, 2);
  EXPECT_EQ(r.wins, 50u);
  EXPECT_EQ(r.win_rate, 1);
}

TEST(RecordingSchemeTest, LogsOnlyAcceptedChecks) {
  auto scheme = make_signature_scheme("schnorr", 64);
  RecordingScheme rec(*scheme);
  std::mt19937_64 rng(3);
  SignatureKeyPair keys = rec.gen(rng);
  BitString m = random_bits(20, rng);
  BitString sigma = rec.sign(keys.sk, m);
  EXPECT_TRUE(rec.verify(keys.pk, m, sigma));
  m.flip(1);
  EXPECT_FALSE(rec.verify(keys.pk, m, sigma));
  EXPECT_EQ(rec.verify_calls(), 2u);
  ASSERT_EQ(rec.accepted().size(), 1u);
  EXPECT_EQ(rec.accepted()[0].signature, sigma);
  rec.clear();
  EXPECT_TRUE(rec.accepted().empty());
}

}  // namespace
}  // namespace crldc
