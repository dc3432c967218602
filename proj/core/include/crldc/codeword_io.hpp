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

#include <cstdint>
#include <string>
#include <vector>

#include "crldc/bitstring.hpp"

namespace crldc {

// Codeword file: an 8-byte little-endian bit length followed by the bits
// packed most significant bit first.
std::vector<std::uint8_t> serialize_codeword(const BitString& word);
BitString deserialize_codeword(const std::vector<std::uint8_t>& bytes);

void write_codeword(const std::string& path, const BitString& word);
BitString read_codeword(const std::string& path);

}  // namespace crldc
