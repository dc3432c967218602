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
#include <optional>
#include <random>
#include <vector>

#include "crldc/bitstring.hpp"
#include "crldc/inner_hamming.hpp"
#include "crldc/oracle.hpp"
#include "crldc/payload.hpp"
#include "crldc/rational.hpp"
#include "crldc/sigscheme.hpp"

namespace crldc {

struct HammingParams {
  std::size_t lambda = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t pk_len = 0;
  Rational c;
  std::size_t mu = 0;
  std::size_t d = 0;
  std::size_t index_bits = 0;
  std::size_t payload_len = 0;
  Rational beta_in;
  std::size_t bl = 0;
  std::size_t K = 0;
  std::size_t inner_radius = 0;  // flips the inner code always corrects
  Rational rho_in;
  Rational rho;
  double p = 0;  // 1 - exp(-mu (1/2 - c)^2 / (2 (1 - c)))
  Rational delta;
  std::size_t locality_bound = 0;
};

// 1 - exp(-mu (1/2 - c)^2 / (2 (1 - c))).
double hamming_success_bound(const Rational& c, std::size_t mu);

// Smallest mu >= 1 with hamming_success_bound(c, mu) >= target_p.
// Throws InfeasibleTarget when target_p >= 1.
std::size_t hamming_mu_for_target(const Rational& c, double target_p);

// Derives every public parameter. rho_in comes from the inner code
// instance built for payload_len and beta_in.
HammingParams compute_hamming_params(std::size_t lambda, std::size_t k,
                                     std::size_t r, std::size_t pk_len,
                                     const Rational& c, double target_p,
                                     const Rational& beta_in);

// Same derivation with mu supplied directly.
HammingParams hamming_params_with_mu(std::size_t lambda, std::size_t k,
                                     std::size_t r, std::size_t pk_len,
                                     const Rational& c, std::size_t mu,
                                     const Rational& beta_in);

struct HammingEncoding {
  BitString codeword;
  BitString pk;
  std::vector<SignedBlockPayload> payloads;
  // 1-indexed inclusive bit ranges of each block.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
};

// Hamming crLDC: every r-bit message block is signed together with its
// index, packed with the public key and encoded by the inner code.
class HammingCode {
 public:
  // Throws ParamMismatch when the scheme's lengths disagree with params.
  HammingCode(HammingParams params, const SignatureScheme& scheme);

  const HammingParams& params() const { return params_; }
  const InnerHammingCode& inner() const { return inner_; }
  const SignatureScheme& scheme() const { return scheme_; }

  // Keys are drawn from rng; the secret key does not outlive the call.
  HammingEncoding encode(const BitString& x, std::mt19937_64& rng) const;

  // Samples mu blocks with replacement, takes the majority public key,
  // decodes block ceil(i / r) and checks its signature under that key and
  // the computed index. Reads exactly (mu + 1) * bl bits.
  DecodeOutcome decode(ReceivedWordOracle& oracle, std::size_t i,
                       std::uint64_t seed) const;

  // Baseline that trusts the public key stored in block ceil(i / r).
  DecodeOutcome decode_strawman(ReceivedWordOracle& oracle, std::size_t i,
                                std::uint64_t seed) const;

  // Decodes and parses block j of a full word (used by adversaries, which
  // may decode any block).
  SignedBlockPayload read_block(const BitString& word, std::size_t j) const;
  BitString encode_payload(const SignedBlockPayload& payload) const;

 private:
  SignedBlockPayload parse(const BitString& payload_bits) const;
  void check_index(ReceivedWordOracle& oracle, std::size_t i) const;

  HammingParams params_;
  const SignatureScheme& scheme_;
  InnerHammingCode inner_;
};

}  // namespace crldc
