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

#include "crldc/oracle.hpp"

#include "crldc/errors.hpp"

namespace crldc {

ReceivedWordOracle::ReceivedWordOracle(BitString word)
    : word_(std::make_shared<const BitString>(std::move(word))) {}

ReceivedWordOracle::ReceivedWordOracle(std::shared_ptr<const BitString> word)
    : word_(std::move(word)) {
  if (!word_) throw InvalidParam("oracle over a null word");
}

BitString ReceivedWordOracle::read(std::size_t a, std::size_t b) {
  if (a < 1 || a > b || b > word_->size()) {
    throw OutOfRange("oracle read [" + std::to_string(a) + ", " +
                     std::to_string(b) + "] of length " +
                     std::to_string(word_->size()));
  }
  query_count_ += b - a + 1;
  if (log_) {
    for (std::size_t p = a; p <= b; ++p) log_->push_back(p);
  }
  return word_->slice(a, b);
}

bool ReceivedWordOracle::read_bit(std::size_t i) {
  if (i < 1 || i > word_->size()) {
    throw OutOfRange("oracle read_bit " + std::to_string(i));
  }
  ++query_count_;
  if (log_) log_->push_back(i);
  return word_->raw()[i - 1] != 0;
}

CachedReader::CachedReader(ReceivedWordOracle& oracle)
    : oracle_(oracle), cache_(oracle.length(), -1) {}

bool CachedReader::bit(std::size_t i) {
  if (i < 1 || i > cache_.size()) {
    throw OutOfRange("cached read " + std::to_string(i));
  }
  std::int8_t& slot = cache_[i - 1];
  if (slot < 0) {
    slot = oracle_.read_bit(i) ? 1 : 0;
    ++distinct_;
  }
  return slot != 0;
}

BitString CachedReader::read(std::size_t a, std::size_t b) {
  if (a < 1 || a > b || b > cache_.size()) throw OutOfRange("cached read range");
  BitString out(b - a + 1);
  for (std::size_t p = a; p <= b; ++p) out.set_bit(p - a + 1, bit(p));
  return out;
}

}  // namespace crldc
