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
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "crldc/bitstring.hpp"

namespace crldc {

// Query-counted, read-only view of a received word.
//
// Every bit returned to a caller is charged one query. The word is shared
// and immutable; each decoder trial owns its own oracle.
class ReceivedWordOracle {
 public:
  explicit ReceivedWordOracle(BitString word);
  explicit ReceivedWordOracle(std::shared_ptr<const BitString> word);

  std::size_t length() const { return word_->size(); }

  // Bits a..b inclusive, 1-indexed. Throws OutOfRange.
  BitString read(std::size_t a, std::size_t b);
  bool read_bit(std::size_t i);

  std::size_t query_count() const { return query_count_; }
  void reset_count() { query_count_ = 0; }

  void enable_log() { log_.emplace(); }
  const std::optional<std::vector<std::size_t>>& query_log() const {
    return log_;
  }

 private:
  std::shared_ptr<const BitString> word_;
  std::size_t query_count_ = 0;
  std::optional<std::vector<std::size_t>> log_;
};

// Per-call memo over an oracle: each position is charged once no matter
// how many times it is read through this view.
class CachedReader {
 public:
  explicit CachedReader(ReceivedWordOracle& oracle);

  std::size_t length() const { return oracle_.length(); }
  bool bit(std::size_t i);
  BitString read(std::size_t a, std::size_t b);
  std::size_t distinct_reads() const { return distinct_; }

 private:
  ReceivedWordOracle& oracle_;
  std::vector<std::int8_t> cache_;
  std::size_t distinct_ = 0;
};

}  // namespace crldc
