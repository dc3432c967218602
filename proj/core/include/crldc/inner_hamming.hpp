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
#include <utility>
#include <vector>

#include "crldc/bitstring.hpp"
#include "crldc/rational.hpp"
#include "crldc/reed_solomon.hpp"

namespace crldc {

// Binary inner code for Hamming errors: Reed-Solomon over GF(256) with
// each byte expanded to 8 consecutive bits. One bit flip corrupts at most
// one symbol, so the bit-level radius equals the symbol capacity. Codes
// wider than 255 symbols are split into contiguous chunks.
class InnerHammingCode {
 public:
  // codeword_len = t / beta_in must be an integer. Throws ParamMismatch.
  InnerHammingCode(std::size_t message_len, const Rational& beta_in);

  std::size_t message_len() const { return t_; }
  std::size_t codeword_len() const { return n_bits_; }
  const Rational& beta_in() const { return beta_in_; }
  // Guaranteed correctable flips, and that count over codeword_len.
  std::size_t radius() const { return radius_; }
  Rational rho_in() const;

  BitString encode(const BitString& m) const;
  // Nearest codeword inside the radius. Beyond it, the systematic message
  // bits of y (best effort, deterministic).
  BitString decode(const BitString& y) const;
  // Same as decode, also reporting whether the outer decoder succeeded.
  BitString decode(const BitString& y, bool& within_radius) const;

  // Bit range [first, last] (1-indexed) carrying symbol s.
  std::size_t symbol_count() const { return total_symbols_; }
  std::size_t symbol_first_bit(std::size_t s) const { return 8 * s + 1; }

  // {first symbol, symbol count} of the chunk whose capacity is radius().
  std::pair<std::size_t, std::size_t> weakest_chunk() const;

 private:
  struct Chunk {
    std::size_t message_symbols;
    std::size_t codeword_symbols;
  };

  std::size_t t_;
  Rational beta_in_;
  std::size_t n_bits_;
  std::size_t total_symbols_;
  std::size_t message_symbols_;
  std::size_t radius_;
  std::vector<Chunk> chunks_;
  std::vector<ReedSolomon> codecs_;
};

}  // namespace crldc
