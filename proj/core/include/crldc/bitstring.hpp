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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crldc {

// An ordered sequence of bits.
//
// The public accessors bit() and slice() are 1-indexed and inclusive, so
// slice(a, b) returns bits a..b. raw() exposes the 0-indexed storage for
// algorithms that scan the whole string.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length, bool value = false);
  BitString(std::initializer_list<int> bits);

  // Parses a string of '0' and '1' characters.
  static BitString from_string(std::string_view text);
  // Big-endian encoding of value in exactly width bits.
  static BitString from_uint(std::uint64_t value, std::size_t width);
  // Unpacks the first bit_length bits of bytes, most significant bit first.
  static BitString from_bytes(std::span<const std::uint8_t> bytes,
                              std::size_t bit_length);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool value);
  void flip(std::size_t i);
  BitString slice(std::size_t a, std::size_t b) const;

  void push_back(bool value) { bits_.push_back(value ? 1 : 0); }
  void append(const BitString& other);
  BitString operator+(const BitString& other) const;

  // Reads bits a..b (1-indexed) as a big-endian unsigned integer.
  std::uint64_t to_uint(std::size_t a, std::size_t b) const;
  std::uint64_t to_uint() const { return empty() ? 0 : to_uint(1, size()); }

  std::size_t weight() const;
  BitString complement() const;
  std::string to_string() const;
  // Packs bits most significant bit first, zero-filling the final byte.
  std::vector<std::uint8_t> to_bytes() const;

  std::span<const std::uint8_t> raw() const { return bits_; }

  bool operator==(const BitString& other) const = default;
  // Shorter strings order first; equal lengths compare lexicographically.
  std::strong_ordering operator<=>(const BitString& other) const;

 private:
  std::vector<std::uint8_t> bits_;
};

// Uniformly random bits drawn from rng.
BitString random_bits(std::size_t n, std::mt19937_64& rng);

}  // namespace crldc
