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

#include "crldc/forgery.hpp"

namespace crldc {

namespace {

BitString random_message(std::mt19937_64& rng) {
  return random_bits(16 + rng() % 240, rng);
}

}  // namespace

BitString SigningOracle::sign(const BitString& m) {
  queried_.insert(m);
  return scheme_.sign(sk_, m);
}

ForgeryGameResult run_forgery_game(const SignatureScheme& scheme,
                                   ForgeryAdversary& adversary,
                                   std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ForgeryGameResult result;
  result.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    SignatureKeyPair kp = scheme.gen(rng);
    adversary.receive_secret(kp.sk);
    SigningOracle oracle(scheme, kp.sk);
    ForgeryAttempt attempt = adversary.attack(kp.pk, oracle, rng);
    bool valid = attempt.signature.size() == scheme.sig_len() &&
                 scheme.verify(kp.pk, attempt.message, attempt.signature);
    if (valid) ++result.verified;
    if (valid && !oracle.queried().contains(attempt.message)) ++result.wins;
  }
  result.win_rate =
      trials == 0 ? Rational(0) : Rational(BigInt(result.wins), BigInt(trials));
  return result;
}

ForgeryAttempt RandomGuessAdversary::attack(const BitString& pk,
                                            SigningOracle&,
                                            std::mt19937_64& rng) {
  return {random_message(rng), random_bits(pk.size(), rng)};
}

ForgeryAttempt ReplayAdversary::attack(const BitString&, SigningOracle& oracle,
                                       std::mt19937_64& rng) {
  BitString m = random_message(rng);
  return {m, oracle.sign(m)};
}

ForgeryAttempt BitFlipAdversary::attack(const BitString&,
                                        SigningOracle& oracle,
                                        std::mt19937_64& rng) {
  BitString m = random_message(rng);
  BitString sigma = oracle.sign(m);
  m.flip(1 + rng() % m.size());
  return {m, sigma};
}

ForgeryAttempt CrossKeyAdversary::attack(const BitString&, SigningOracle&,
                                         std::mt19937_64& rng) {
  SignatureKeyPair own = scheme_.gen(rng);
  BitString m = random_message(rng);
  return {m, scheme_.sign(own.sk, m)};
}

ForgeryAttempt HonestSignerAdversary::attack(const BitString&, SigningOracle&,
                                             std::mt19937_64& rng) {
  BitString m = random_message(rng);
  return {m, scheme_.sign(sk_, m)};
}

std::vector<std::unique_ptr<ForgeryAdversary>> shipped_forgery_adversaries(
    const SignatureScheme& scheme) {
  std::vector<std::unique_ptr<ForgeryAdversary>> out;
  out.push_back(std::make_unique<BitFlipAdversary>());
  out.push_back(std::make_unique<CrossKeyAdversary>(scheme));
  out.push_back(std::make_unique<ReplayAdversary>());
  out.push_back(std::make_unique<RandomGuessAdversary>());
  return out;
}

}  // namespace crldc
