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

#include "crldc/payload.hpp"

#include "crldc/errors.hpp"

namespace crldc {

BitString SignedBlockPayload::serialize(std::size_t index_bits) const {
  if (index == 0) throw OutOfRange("block index is 1-based");
  return x_block + sigma + pk + BitString::from_uint(index - 1, index_bits);
}

SignedBlockPayload SignedBlockPayload::parse(const BitString& bits,
                                             std::size_t r, std::size_t sig_len,
                                             std::size_t pk_len,
                                             std::size_t index_bits) {
  if (bits.size() < r + sig_len + pk_len + index_bits) {
    throw LengthMismatch("payload of " + std::to_string(bits.size()) +
                         " bits is too short");
  }
  SignedBlockPayload p;
  std::size_t at = 1;
  p.x_block = bits.slice(at, at + r - 1);
  at += r;
  p.sigma = bits.slice(at, at + sig_len - 1);
  at += sig_len;
  p.pk = bits.slice(at, at + pk_len - 1);
  at += pk_len;
  p.index = static_cast<std::size_t>(bits.to_uint(at, at + index_bits - 1)) + 1;
  return p;
}

BitString signed_message(const BitString& x_block, std::size_t j,
                         std::size_t index_bits) {
  if (j == 0) throw OutOfRange("block index is 1-based");
  return x_block + BitString::from_uint(j - 1, index_bits);
}

}  // namespace crldc
