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

#include "crldc/codeword_io.hpp"

#include <fstream>
#include <iterator>

#include "crldc/errors.hpp"

namespace crldc {

std::vector<std::uint8_t> serialize_codeword(const BitString& word) {
  std::vector<std::uint8_t> out(8, 0);
  std::uint64_t n = word.size();
  for (int k = 0; k < 8; ++k) out[k] = static_cast<std::uint8_t>(n >> (8 * k));
  auto packed = word.to_bytes();
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

BitString deserialize_codeword(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 8) throw MalformedInput("codeword header truncated");
  std::uint64_t n = 0;
  for (int k = 7; k >= 0; --k) n = (n << 8) | bytes[k];
  if ((bytes.size() - 8) * 8 < n || bytes.size() - 8 != (n + 7) / 8) {
    throw MalformedInput("codeword body does not match header length");
  }
  return BitString::from_bytes(
      std::span<const std::uint8_t>(bytes.data() + 8, bytes.size() - 8), n);
}

void write_codeword(const std::string& path, const BitString& word) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  auto bytes = serialize_codeword(word);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path);
}

BitString read_codeword(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return deserialize_codeword(bytes);
}

}  // namespace crldc
