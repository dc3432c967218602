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
#include <optional>
#include <random>
#include <vector>

#include "crldc/bitstring.hpp"
#include "crldc/inner_insdel.hpp"
#include "crldc/insdel_params.hpp"
#include "crldc/oracle.hpp"
#include "crldc/payload.hpp"
#include "crldc/sigscheme.hpp"

namespace crldc {

struct InsDelEncoding {
  BitString codeword;
  BitString pk;
  std::vector<SignedBlockPayload> payloads;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
};

// Declared constants of the query bounds checked by the audits:
//   dec_ins <= kDecodeQueryConstant * (log2^3 K' + mu) * (r + log2 k)
//   nbs     <= kSearchQueryConstant * log2^3 K' * (tau + log2 d)
inline constexpr double kDecodeQueryConstant = 1.0;
inline constexpr double kSearchQueryConstant = 1.0;

// InsDel crLDC: each signed payload is encoded by the inner InsDel code and
// wrapped in zero buffers; decoding locates blocks through the buffers.
class InsDelCode {
 public:
  // Throws ParamMismatch when the scheme or inner code disagrees with params.
  InsDelCode(InsDelParams params, const SignatureScheme& scheme);
  ~InsDelCode();

  const InsDelParams& params() const { return params_; }
  const InnerInsDelCode& inner() const { return inner_; }
  const SignatureScheme& scheme() const { return scheme_; }

  InsDelEncoding encode(const BitString& x, std::mt19937_64& rng) const;

  // Locates the buffers around position i, decodes the enclosing core and
  // parses it; nullopt is bottom. Deterministic, so seed is unused.
  std::optional<SignedBlockPayload> block_dec(ReceivedWordOracle& oracle,
                                              std::size_t i,
                                              std::uint64_t seed) const;

  // Randomized binary search for the block whose parsed index is j.
  std::optional<SignedBlockPayload> nbs(ReceivedWordOracle& oracle,
                                        std::size_t j,
                                        std::uint64_t seed) const;

  DecodeOutcome decode(ReceivedWordOracle& oracle, std::size_t i,
                       std::uint64_t seed) const;

  // Baseline that reads block j at its uncorrupted offsets.
  DecodeOutcome decode_positional(ReceivedWordOracle& oracle, std::size_t i,
                                  std::uint64_t seed) const;

  double decode_query_bound(std::size_t received_len) const;
  double search_query_bound(std::size_t received_len) const;

 private:
  class Session;

  SignedBlockPayload parse(const BitString& payload_bits) const;
  std::optional<SignedBlockPayload> decode_core(const BitString& core) const;
  DecodeOutcome finish(const std::optional<BitString>& pk_star, bool tie,
                       const std::optional<SignedBlockPayload>& block,
                       std::size_t i, std::size_t j) const;

  InsDelParams params_;
  const SignatureScheme& scheme_;
  InnerInsDelCode inner_;
};

}  // namespace crldc
