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
#include <span>
#include <vector>

namespace crldc {

// Systematic Reed-Solomon code RS(n, k) over GF(256) with an
// errors-and-erasures decoder (Berlekamp-Massey on Forney syndromes,
// Chien search, Forney's formula). Codewords are laid out as the k message
// symbols followed by n - k parity symbols.
class ReedSolomon {
 public:
  ReedSolomon(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t parity() const { return n_ - k_; }

  std::vector<std::uint8_t> encode(std::span<const std::uint8_t> message) const;

  struct Decoded {
    std::vector<std::uint8_t> message;
    std::size_t corrected = 0;
  };

  // Succeeds whenever 2 * errors + erasures <= n - k. Erasure positions are
  // 0-indexed codeword positions. Returns nullopt on detected failure.
  std::optional<Decoded> decode(std::span<const std::uint8_t> received,
                                std::span<const std::size_t> erasures = {}) const;

 private:
  std::vector<std::uint8_t> syndromes(std::span<const std::uint8_t> word) const;

  std::size_t n_;
  std::size_t k_;
  std::vector<std::uint8_t> generator_;  // highest degree first, monic
};

}  // namespace crldc
