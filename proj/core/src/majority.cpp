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

#include "crldc/majority.hpp"

#include <map>

#include "crldc/errors.hpp"

namespace crldc {

MajorityResult majority(const std::vector<std::optional<BitString>>& values) {
  if (values.empty()) throw EmptyList("majority of an empty list");
  std::map<BitString, std::size_t> counts;
  std::size_t bottoms = 0;
  for (const auto& v : values) {
    if (v) {
      ++counts[*v];
    } else {
      ++bottoms;
    }
  }
  MajorityResult out;
  const BitString* best = nullptr;
  std::size_t best_count = 0;
  std::size_t modal = 0;
  for (const auto& [value, count] : counts) {
    if (count > best_count) {
      best = &value;
      best_count = count;
      modal = 1;
    } else if (count == best_count) {
      ++modal;
    }
  }
  if (best == nullptr || bottoms > best_count) {
    out.votes = bottoms;
    out.tie = best != nullptr && modal > 1;
    return out;
  }
  out.value = *best;
  out.votes = best_count;
  out.tie = modal > 1 || bottoms == best_count;
  return out;
}

}  // namespace crldc
