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
#include <optional>
#include <string>

#include "crldc/bitstring.hpp"

namespace crldc {

// Payload x_j . sigma_j . pk . j carried by every codeword block. The index
// field holds j - 1 big-endian in index_bits bits, so j ranges over
// [1, 2^index_bits].
struct SignedBlockPayload {
  BitString x_block;
  BitString sigma;
  BitString pk;
  std::size_t index = 0;

  BitString serialize(std::size_t index_bits) const;
  static SignedBlockPayload parse(const BitString& bits, std::size_t r,
                                  std::size_t sig_len, std::size_t pk_len,
                                  std::size_t index_bits);

  bool operator==(const SignedBlockPayload&) const = default;
};

// The message covered by sigma_j: x_j followed by the index field of j.
BitString signed_message(const BitString& x_block, std::size_t j,
                         std::size_t index_bits);

struct DecodeOutcome {
  std::optional<bool> value;  // nullopt is bottom
  // The verified r-bit block that value was read from. Every index of the
  // block shares the decoder's random choices, so this answers them all.
  std::optional<BitString> block_bits;
  std::size_t queries_used = 0;
  std::optional<BitString> pk_star;
  bool pk_tie = false;
  // "none" on success; otherwise the check that produced bottom.
  std::string detail = "none";
};

}  // namespace crldc
