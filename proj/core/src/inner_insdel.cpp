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

#include "crldc/inner_insdel.hpp"

#include <vector>

#include "crldc/errors.hpp"

namespace crldc {

namespace {

std::size_t message_symbols(std::size_t t) { return (t + 7) / 8; }

ReedSolomon make_outer(std::size_t t) {
  if (t < InnerInsDelCode::kMinMessageLen) {
    throw TTooSmall("inner InsDel code needs t >= " +
                    std::to_string(InnerInsDelCode::kMinMessageLen) +
                    ", got " + std::to_string(t));
  }
  std::size_t a = message_symbols(t);
  std::size_t n = 2 * a + 2;
  if (n > 255) {
    throw ParamMismatch("inner InsDel code supports t <= 1008, got " +
                        std::to_string(t));
  }
  return ReedSolomon(n, a);
}

}  // namespace

InnerInsDelCode::InnerInsDelCode(std::size_t message_len)
    : t_(message_len), rs_(make_outer(message_len)) {
  index_bits_ = index_width(rs_.n());
  payload_bits_ = index_bits_ + 8;
  codeword_len_ = 2 + rs_.n() * frame_len();
  edit_capacity_ = rs_.parity() / 3;
}

Rational InnerInsDelCode::beta_sz() const {
  return Rational(BigInt(t_), BigInt(codeword_len_));
}

Rational InnerInsDelCode::rho_sz() const {
  return Rational(BigInt(edit_capacity_), BigInt(2 * codeword_len_));
}

std::size_t InnerInsDelCode::density_window() const {
  return 2 * ceil_log2(t_);
}

BitString InnerInsDelCode::encode(const BitString& m) const {
  if (m.size() != t_) {
    throw LengthMismatch("inner InsDel message of " + std::to_string(m.size()) +
                         " bits, expected " + std::to_string(t_));
  }
  BitString padded = m;
  padded.append(BitString(8 * rs_.k() - t_));
  auto symbols = rs_.encode(padded.to_bytes());
  BitString out;
  out.push_back(true);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    out.append(BitString{0, 1, 1, 0});
    BitString payload = BitString::from_uint(i, index_bits_) +
                        BitString::from_uint(symbols[i], 8);
    for (std::uint8_t b : payload.raw()) {
      out.push_back(true);
      out.push_back(b != 0);
    }
    out.push_back(true);
  }
  out.push_back(true);
  return out;
}

std::optional<BitString> InnerInsDelCode::decode(const BitString& y) const {
  const auto bits = y.raw();
  const std::size_t n = rs_.n();
  const std::size_t flen = frame_len();
  std::vector<int> value(n, -1);  // -1 unseen, -2 conflicting
  for (std::size_t p = 0; p + flen <= bits.size(); ++p) {
    if (bits[p] != 0 || bits[p + 1] != 1 || bits[p + 2] != 1 || bits[p + 3] != 0) {
      continue;
    }
    bool aligned = true;
    std::uint32_t payload = 0;
    for (std::size_t q = 0; q < payload_bits_; ++q) {
      if (bits[p + 4 + 2 * q] != 1) {
        aligned = false;
        break;
      }
      payload = (payload << 1) | bits[p + 5 + 2 * q];
    }
    if (!aligned || bits[p + flen - 1] != 1) continue;
    std::size_t idx = payload >> 8;
    int sym = static_cast<int>(payload & 0xff);
    if (idx >= n) continue;
    if (value[idx] == -1) {
      value[idx] = sym;
    } else if (value[idx] != sym) {
      value[idx] = -2;
    }
  }
  std::vector<std::uint8_t> received(n, 0);
  std::vector<std::size_t> erasures;
  for (std::size_t i = 0; i < n; ++i) {
    if (value[i] < 0) {
      erasures.push_back(i);
    } else {
      received[i] = static_cast<std::uint8_t>(value[i]);
    }
  }
  if (erasures.size() > rs_.parity()) return std::nullopt;
  auto decoded = rs_.decode(received, erasures);
  if (!decoded) return std::nullopt;
  return BitString::from_bytes(decoded->message, t_);
}

}  // namespace crldc
