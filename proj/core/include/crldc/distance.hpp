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
#include <string>

#include "crldc/bitstring.hpp"
#include "crldc/rational.hpp"

namespace crldc {

enum class Metric { kHamming, kEdit };

std::string to_string(Metric metric);

struct DistanceReport {
  std::size_t raw = 0;
  Rational normalized = 0;
  Metric metric = Metric::kHamming;
};

// Flip count and flips / |u|. Throws LengthMismatch when |u| != |v|.
DistanceReport hamming_distance(const BitString& u, const BitString& v);

// Insertion/deletion distance normalized by 2 * max(|u|, |v|).
DistanceReport edit_distance(const BitString& u, const BitString& v);

// Length of a longest common subsequence (bit-parallel).
std::size_t lcs_length(const BitString& u, const BitString& v);

// Raw insertion/deletion distance, |u| + |v| - 2 * LCS(u, v).
std::size_t raw_edit_distance(const BitString& u, const BitString& v);

}  // namespace crldc
