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

namespace crldc {

// A non-decreasing map from received-word positions to blocks, stored as
// one interval per block. An empty interval has first == last + 1.
struct BlockDecomposition {
  std::size_t d = 0;
  std::size_t block_len = 0;
  std::vector<std::pair<std::size_t, std::size_t>> intervals;  // 1-indexed
  std::vector<std::size_t> per_block_raw;
  std::vector<Rational> per_block_ed;  // raw / (2 max(|interval|, block_len))
  std::size_t total_raw = 0;           // raw ED of the whole words

  std::size_t interval_length(std::size_t j) const;  // j is 1-indexed
  // Block owning received position p, or 0 if none (p outside the word).
  std::size_t block_of(std::size_t p) const;
};

// Minimizes the sum of per-block raw edit distances over all partitions of
// c_tilde into d consecutive pieces. The minimum equals ED(c, c_tilde); the
// cut at each block boundary is the leftmost column an optimal alignment
// crosses there. Quadratic in the edit distance times |c|; intended for
// tests and audits. Throws ParamMismatch unless d divides |c|.
BlockDecomposition optimal_block_decomposition(const BitString& c,
                                               const BitString& c_tilde,
                                               std::size_t d);

struct GammaGoodReport {
  std::vector<std::size_t> good_indices;  // 1-indexed, ascending
  Rational bad_fraction;
  std::vector<std::size_t> interval_lengths;  // one per good block
};

// Block j is good when its normalized per-block distance is at most gamma.
GammaGoodReport classify_gamma_good(const BlockDecomposition& decomposition,
                                    const Rational& gamma);

}  // namespace crldc
