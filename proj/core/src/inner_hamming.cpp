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

#include "crldc/inner_hamming.hpp"

#include <algorithm>

#include "crldc/errors.hpp"

namespace crldc {

InnerHammingCode::InnerHammingCode(std::size_t message_len,
                                   const Rational& beta_in)
    : t_(message_len), beta_in_(beta_in) {
  if (t_ == 0) throw ParamMismatch("inner Hamming message length is zero");
  if (beta_in <= 0 || beta_in > 1) {
    throw ParamMismatch("beta_in must lie in (0, 1]");
  }
  Rational len = Rational(BigInt(t_)) / beta_in;
  if (denominator(len) != 1) {
    throw ParamMismatch("t / beta_in = " + to_string(len) +
                        " is not an integer");
  }
  n_bits_ = numerator(len).convert_to<std::size_t>();
  total_symbols_ = n_bits_ / 8;
  message_symbols_ = (t_ + 7) / 8;
  if (total_symbols_ <= message_symbols_) {
    throw ParamMismatch("beta_in leaves no room for redundancy at t = " +
                        std::to_string(t_));
  }
  std::size_t pieces = (total_symbols_ + 254) / 255;
  radius_ = total_symbols_;
  for (std::size_t c = 0; c < pieces; ++c) {
    Chunk ch;
    ch.codeword_symbols = total_symbols_ / pieces + (c < total_symbols_ % pieces);
    ch.message_symbols =
        message_symbols_ / pieces + (c < message_symbols_ % pieces);
    if (ch.message_symbols == 0 || ch.message_symbols >= ch.codeword_symbols) {
      throw ParamMismatch("cannot split inner Hamming code into chunks");
    }
    radius_ = std::min(radius_,
                       (ch.codeword_symbols - ch.message_symbols) / 2);
    chunks_.push_back(ch);
    codecs_.emplace_back(ch.codeword_symbols, ch.message_symbols);
  }
}

std::pair<std::size_t, std::size_t> InnerHammingCode::weakest_chunk() const {
  std::size_t first = 0;
  for (const Chunk& ch : chunks_) {
    if ((ch.codeword_symbols - ch.message_symbols) / 2 == radius_) {
      return {first, ch.codeword_symbols};
    }
    first += ch.codeword_symbols;
  }
  return {0, total_symbols_};
}

Rational InnerHammingCode::rho_in() const {
  return Rational(BigInt(radius_), BigInt(n_bits_));
}

BitString InnerHammingCode::encode(const BitString& m) const {
  if (m.size() != t_) {
    throw LengthMismatch("inner Hamming message of " + std::to_string(m.size()) +
                         " bits, expected " + std::to_string(t_));
  }
  BitString padded = m;
  padded.append(BitString(8 * message_symbols_ - t_));
  std::vector<std::uint8_t> bytes = padded.to_bytes();
  std::vector<std::uint8_t> symbols;
  std::size_t offset = 0;
  for (std::size_t c = 0; c < chunks_.size(); ++c) {
    auto cw = codecs_[c].encode(std::span<const std::uint8_t>(
        bytes.data() + offset, chunks_[c].message_symbols));
    symbols.insert(symbols.end(), cw.begin(), cw.end());
    offset += chunks_[c].message_symbols;
  }
  BitString out = BitString::from_bytes(symbols, 8 * symbols.size());
  out.append(BitString(n_bits_ - out.size()));
  return out;
}

BitString InnerHammingCode::decode(const BitString& y) const {
  bool ignored = false;
  return decode(y, ignored);
}

BitString InnerHammingCode::decode(const BitString& y,
                                   bool& within_radius) const {
  if (y.size() != n_bits_) {
    throw LengthMismatch("inner Hamming word of " + std::to_string(y.size()) +
                         " bits, expected " + std::to_string(n_bits_));
  }
  std::vector<std::uint8_t> bytes = y.to_bytes();
  std::vector<std::uint8_t> message;
  within_radius = true;
  std::size_t offset = 0;
  for (std::size_t c = 0; c < chunks_.size(); ++c) {
    std::span<const std::uint8_t> word(bytes.data() + offset,
                                       chunks_[c].codeword_symbols);
    auto decoded = codecs_[c].decode(word);
    if (decoded) {
      message.insert(message.end(), decoded->message.begin(),
                     decoded->message.end());
    } else {
      within_radius = false;
      message.insert(message.end(), word.begin(),
                     word.begin() + static_cast<long>(chunks_[c].message_symbols));
    }
    offset += chunks_[c].codeword_symbols;
  }
  return BitString::from_bytes(message, t_);
}

}  // namespace crldc
