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

#include "crldc/bitstring.hpp"

#include <algorithm>

#include "crldc/errors.hpp"

namespace crldc {

BitString::BitString(std::size_t length, bool value)
    : bits_(length, value ? 1 : 0) {}

BitString::BitString(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw MalformedInput("bit values must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitString BitString::from_string(std::string_view text) {
  BitString out;
  out.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw MalformedInput("bit string may only contain '0' and '1'");
    }
    out.bits_.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw OutOfRange("value does not fit in " + std::to_string(width) +
                     " bits");
  }
  BitString out(width);
  for (std::size_t k = 0; k < width; ++k) {
    std::size_t shift = width - 1 - k;
    out.bits_[k] = shift < 64 ? static_cast<std::uint8_t>((value >> shift) & 1)
                              : 0;
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes,
                                std::size_t bit_length) {
  if (bit_length > bytes.size() * 8) {
    throw LengthMismatch("not enough bytes for requested bit length");
  }
  BitString out(bit_length);
  for (std::size_t k = 0; k < bit_length; ++k) {
    out.bits_[k] = (bytes[k / 8] >> (7 - k % 8)) & 1;
  }
  return out;
}

bool BitString::bit(std::size_t i) const {
  if (i < 1 || i > bits_.size()) {
    throw OutOfRange("bit index " + std::to_string(i) + " outside [1, " +
                     std::to_string(bits_.size()) + "]");
  }
  return bits_[i - 1] != 0;
}

void BitString::set_bit(std::size_t i, bool value) {
  if (i < 1 || i > bits_.size()) throw OutOfRange("set_bit index");
  bits_[i - 1] = value ? 1 : 0;
}

void BitString::flip(std::size_t i) {
  if (i < 1 || i > bits_.size()) throw OutOfRange("flip index");
  bits_[i - 1] ^= 1;
}

BitString BitString::slice(std::size_t a, std::size_t b) const {
  if (a < 1 || a > b || b > bits_.size()) {
    throw OutOfRange("slice [" + std::to_string(a) + ", " + std::to_string(b) +
                     "] of length " + std::to_string(bits_.size()));
  }
  BitString out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(a - 1),
                   bits_.begin() + static_cast<std::ptrdiff_t>(b));
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::operator+(const BitString& other) const {
  BitString out = *this;
  out.append(other);
  return out;
}

std::uint64_t BitString::to_uint(std::size_t a, std::size_t b) const {
  if (a < 1 || a > b || b > bits_.size()) throw OutOfRange("to_uint range");
  if (b - a + 1 > 64) throw OutOfRange("to_uint wider than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t k = a - 1; k < b; ++k) v = (v << 1) | bits_[k];
  return v;
}

std::size_t BitString::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

BitString BitString::complement() const {
  BitString out = *this;
  for (auto& b : out.bits_) b ^= 1;
  return out;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k]) s[k] = '1';
  }
  return s;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k]) out[k / 8] |= static_cast<std::uint8_t>(0x80u >> (k % 8));
  }
  return out;
}

std::strong_ordering BitString::operator<=>(const BitString& other) const {
  if (auto c = bits_.size() <=> other.bits_.size(); c != 0) return c;
  return bits_ <=> other.bits_;
}

BitString random_bits(std::size_t n, std::mt19937_64& rng) {
  BitString out(n);
  std::uint64_t pool = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k % 64 == 0) pool = rng();
    if ((pool >> (k % 64)) & 1) out.set_bit(k + 1, true);
  }
  return out;
}

}  // namespace crldc
