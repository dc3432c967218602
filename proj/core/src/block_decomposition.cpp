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


#include "crldc/block_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <span>

#include "crldc/distance.hpp"
#include "crldc/errors.hpp"

namespace crldc {

namespace {

constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 2;

// Insertion/deletion DP of a against b restricted to the diagonals
// c - r in [olo, ohi]. Returns the full row r (indexed by column) for every
// r in `rows`, with kInf outside the band.
std::map<std::size_t, std::vector<std::int32_t>> banded_rows(
    std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
    long olo, long ohi, const std::vector<std::size_t>& rows) {
  const long n = static_cast<long>(a.size());
  const long m = static_cast<long>(b.size());
  const std::size_t width = static_cast<std::size_t>(ohi - olo + 1);
  std::vector<std::int32_t> prev(width + 2, kInf);
  std::vector<std::int32_t> cur(width + 2, kInf);
  // Slot o - olo + 1 holds diagonal o; slots 0 and width + 1 stay kInf.
  std::map<std::size_t, std::vector<std::int32_t>> out;
  std::size_t next = 0;
  for (long r = 0; r <= n; ++r) {
    std::fill(cur.begin(), cur.end(), kInf);
    const long cmin = std::max(0L, r + olo);
    const long cmax = std::min(m, r + ohi);
    for (long c = cmin; c <= cmax; ++c) {
      const std::size_t slot = static_cast<std::size_t>(c - r - olo + 1);
      std::int32_t v;
      if (r == 0) {
        v = static_cast<std::int32_t>(c);
      } else if (c == 0) {
        v = static_cast<std::int32_t>(r);
      } else if (a[r - 1] == b[c - 1]) {
        v = prev[slot];
      } else {
        // Deletion from a: (r-1, c) is diagonal o + 1 in the previous row.
        // Insertion: (r, c-1) is diagonal o - 1 in this row.
        v = std::min(prev[slot + 1], cur[slot - 1]) + 1;
      }
      cur[slot] = std::min(v, kInf);
    }
    while (next < rows.size() && rows[next] == static_cast<std::size_t>(r)) {
      std::vector<std::int32_t> full(static_cast<std::size_t>(m) + 1, kInf);
      for (long c = cmin; c <= cmax; ++c) {
        full[static_cast<std::size_t>(c)] =
            cur[static_cast<std::size_t>(c - r - olo + 1)];
      }
      out.emplace(rows[next], std::move(full));
      ++next;
    }
    std::swap(prev, cur);
  }
  return out;
}

}  // namespace

std::size_t BlockDecomposition::interval_length(std::size_t j) const {
  const auto& [first, last] = intervals.at(j - 1);
  return last + 1 - first;
}

std::size_t BlockDecomposition::block_of(std::size_t p) const {
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    if (intervals[j].first <= p && p <= intervals[j].second) return j + 1;
  }
  return 0;
}

BlockDecomposition optimal_block_decomposition(const BitString& c,
                                               const BitString& c_tilde,
                                               std::size_t d) {
  if (d == 0 || c.size() % d != 0) {
    throw ParamMismatch("codeword of " + std::to_string(c.size()) +
                        " bits does not split into " + std::to_string(d) +
                        " blocks");
  }
  BlockDecomposition out;
  out.d = d;
  out.block_len = c.size() / d;
  out.total_raw = raw_edit_distance(c, c_tilde);

  // Any path of cost D stays on diagonals o with |o| + |delta - o| <= D.
  const long n = static_cast<long>(c.size());
  const long m = static_cast<long>(c_tilde.size());
  const long delta = m - n;
  const long spare = (static_cast<long>(out.total_raw) - std::labs(delta)) / 2;
  const long olo = std::min(0L, delta) - spare;
  const long ohi = std::max(0L, delta) + spare;

  std::vector<std::size_t> rows;
  std::vector<std::size_t> back_rows;
  for (std::size_t j = 1; j < d; ++j) rows.push_back(j * out.block_len);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    back_rows.push_back(c.size() - *it);
  }
  std::vector<std::uint8_t> rc(c.raw().rbegin(), c.raw().rend());
  std::vector<std::uint8_t> rct(c_tilde.raw().rbegin(), c_tilde.raw().rend());
  auto fwd = banded_rows(c.raw(), c_tilde.raw(), olo, ohi, rows);
  auto bwd = banded_rows(rc, rct, delta - ohi, delta - olo, back_rows);

  std::vector<std::size_t> cuts = {0};
  for (std::size_t row : rows) {
    const auto& f = fwd.at(row);
    const auto& g = bwd.at(c.size() - row);
    std::size_t best = cuts.back();
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    for (std::size_t col = cuts.back(); col <= c_tilde.size(); ++col) {
      std::int64_t cost = static_cast<std::int64_t>(f[col]) +
                          g[c_tilde.size() - col];
      if (cost < best_cost) {
        best_cost = cost;
        best = col;
      }
    }
    cuts.push_back(best);
  }
  cuts.push_back(c_tilde.size());

  for (std::size_t j = 1; j <= d; ++j) {
    const std::size_t first = cuts[j - 1] + 1;
    const std::size_t last = cuts[j];
    out.intervals.emplace_back(first, last);
    BitString piece = first <= last ? c_tilde.slice(first, last) : BitString();
    BitString block = c.slice((j - 1) * out.block_len + 1, j * out.block_len);
    const std::size_t raw = raw_edit_distance(piece, block);
    out.per_block_raw.push_back(raw);
    const std::size_t denom = 2 * std::max(piece.size(), block.size());
    out.per_block_ed.emplace_back(BigInt(raw), BigInt(denom));
  }
  return out;
}

GammaGoodReport classify_gamma_good(const BlockDecomposition& decomposition,
                                    const Rational& gamma) {
  GammaGoodReport out;
  for (std::size_t j = 1; j <= decomposition.d; ++j) {
    if (decomposition.per_block_ed[j - 1] <= gamma) {
      out.good_indices.push_back(j);
      out.interval_lengths.push_back(decomposition.interval_length(j));
    }
  }
  const std::size_t bad = decomposition.d - out.good_indices.size();
  out.bad_fraction = decomposition.d == 0
                         ? Rational(0)
                         : Rational(BigInt(bad), BigInt(decomposition.d));
  return out;
}

}  // namespace crldc
