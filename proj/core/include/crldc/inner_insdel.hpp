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

#include "crldc/bitstring.hpp"
#include "crldc/rational.hpp"
#include "crldc/reed_solomon.hpp"

namespace crldc {

// Marker-synchronized inner code for insertions and deletions.
//
// The message is split into bytes and protected by an outer RS(n, a) code
// with n - a = a + 2 parity symbols. Symbol i travels in a frame
//
//   0110 | 1 b_1 1 b_2 ... 1 b_s | 1
//
// where b_1..b_s are the bits of (i, symbol_i). The interleaved ones keep
// "0110" out of aligned payload and, with the trailing one, keep every
// window of length 2*ceil(log2 t) at weight >= 2/5. The codeword is
// "1" + frames + "1". The decoder locates markers, reads (index, symbol)
// pairs, turns missing or conflicting indices into erasures and runs the
// RS errors-and-erasures decoder.
class InnerInsDelCode {
 public:
  static constexpr std::size_t kMinMessageLen = 8;

  // Throws TTooSmall below kMinMessageLen and ParamMismatch when the outer
  // code would need more than 255 symbols.
  explicit InnerInsDelCode(std::size_t message_len);

  std::size_t message_len() const { return t_; }
  std::size_t codeword_len() const { return codeword_len_; }
  // t / codeword_len, exact.
  Rational beta_sz() const;
  // Declared edit capacity over 2 * codeword_len. Each insertion or
  // deletion costs the outer decoder at most three units (one lost frame
  // counted as an error plus one spurious conflicting frame), so
  // floor(parity / 3) edits are always correctable.
  Rational rho_sz() const;
  std::size_t edit_capacity() const { return edit_capacity_; }
  std::size_t density_window() const;

  std::size_t symbols() const { return rs_.n(); }
  std::size_t frame_len() const { return 5 + 2 * payload_bits_; }

  BitString encode(const BitString& m) const;
  std::optional<BitString> decode(const BitString& y) const;

 private:
  std::size_t t_;
  std::size_t index_bits_;
  std::size_t payload_bits_;
  std::size_t codeword_len_;
  std::size_t edit_capacity_;
  ReedSolomon rs_;
};

}  // namespace crldc
