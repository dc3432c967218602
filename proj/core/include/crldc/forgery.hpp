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
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crldc/bitstring.hpp"
#include "crldc/rational.hpp"
#include "crldc/sigscheme.hpp"

namespace crldc {

// Signing oracle handed to a forger; remembers every queried message.
class SigningOracle {
 public:
  SigningOracle(const SignatureScheme& scheme, const SecretKey& sk)
      : scheme_(scheme), sk_(sk) {}

  BitString sign(const BitString& m);
  const std::set<BitString>& queried() const { return queried_; }

 private:
  const SignatureScheme& scheme_;
  const SecretKey& sk_;
  std::set<BitString> queried_;
};

struct ForgeryAttempt {
  BitString message;
  BitString signature;
};

class ForgeryAdversary {
 public:
  virtual ~ForgeryAdversary() = default;
  virtual std::string name() const = 0;
  virtual ForgeryAttempt attack(const BitString& pk, SigningOracle& oracle,
                                std::mt19937_64& rng) = 0;
  // Out-of-band secret, used only by the honest-signer sanity check.
  virtual void receive_secret(const SecretKey&) {}
};

struct ForgeryGameResult {
  std::size_t trials = 0;
  std::size_t wins = 0;
  std::size_t verified = 0;  // Ver accepted, including disqualified replays
  Rational win_rate = 0;
};

// Wins iff Ver_pk(m, sigma) = 1 and m was never queried.
ForgeryGameResult run_forgery_game(const SignatureScheme& scheme,
                                   ForgeryAdversary& adversary,
                                   std::size_t trials, std::uint64_t seed);

// Outputs a random message with a random signature.
class RandomGuessAdversary : public ForgeryAdversary {
 public:
  std::string name() const override { return "random"; }
  ForgeryAttempt attack(const BitString& pk, SigningOracle& oracle,
                        std::mt19937_64& rng) override;
};

// Replays a queried pair; always disqualified.
class ReplayAdversary : public ForgeryAdversary {
 public:
  std::string name() const override { return "replay"; }
  ForgeryAttempt attack(const BitString& pk, SigningOracle& oracle,
                        std::mt19937_64& rng) override;
};

// Queries m and claims its signature also covers m with one bit flipped.
class BitFlipAdversary : public ForgeryAdversary {
 public:
  std::string name() const override { return "bit-flip"; }
  ForgeryAttempt attack(const BitString& pk, SigningOracle& oracle,
                        std::mt19937_64& rng) override;
};

// Signs a fresh message under its own key pair.
class CrossKeyAdversary : public ForgeryAdversary {
 public:
  explicit CrossKeyAdversary(const SignatureScheme& scheme) : scheme_(scheme) {}
  std::string name() const override { return "cross-key"; }
  ForgeryAttempt attack(const BitString& pk, SigningOracle& oracle,
                        std::mt19937_64& rng) override;

 private:
  const SignatureScheme& scheme_;
};

// Harness sanity check: signs a fresh message with the real secret key.
class HonestSignerAdversary : public ForgeryAdversary {
 public:
  explicit HonestSignerAdversary(const SignatureScheme& scheme)
      : scheme_(scheme) {}
  std::string name() const override { return "honest-signer"; }
  ForgeryAttempt attack(const BitString& pk, SigningOracle& oracle,
                        std::mt19937_64& rng) override;
  void receive_secret(const SecretKey& sk) override { sk_ = sk; }

 private:
  const SignatureScheme& scheme_;
  SecretKey sk_;
};

// The four black-box forgers: bit-flip, cross-key, replay, random.
std::vector<std::unique_ptr<ForgeryAdversary>> shipped_forgery_adversaries(
    const SignatureScheme& scheme);

}  // namespace crldc
