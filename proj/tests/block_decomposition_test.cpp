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


#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "crldc/adversaries.hpp"
#include "crldc/block_decomposition.hpp"
#include "crldc/distance.hpp"
#include "crldc/errors.hpp"
#include "oracles.hpp"

namespace crldc {
namespace {

std::size_t sum_raw(const BlockDecomposition& b) {
  return std::accumulate(b.per_block_raw.begin(), b.per_block_raw.end(),
                         std::size_t{0});
}

void expect_partition(const BlockDecomposition& b, std::size_t len) {
  std::size_t next = 1;
  for (const auto& [first, last] : b.intervals) {
    EXPECT_EQ(first, next);
    EXPECT_GE(last + 1, first);
    next = last + 1;
  }
  EXPECT_EQ(next, len + 1);
}

TEST(BlockDecompositionTest, IdentityOnCleanWords) {
  std::mt19937_64 rng(1);
  BitString c = random_bits(400, rng);
  BlockDecomposition b = optimal_block_decomposition(c, c, 8);
  expect_partition(b, 400);
  for (std::size_t j = 1; j <= 8; ++j) {
    EXPECT_EQ(b.intervals[j - 1],
              (std::pair<std::size_t, std::size_t>{(j - 1) * 50 + 1, j * 50}));
    EXPECT_EQ(b.per_block_raw[j - 1], 0u);
  }
  GammaGoodReport g = classify_gamma_good(b, Rational(1, 12));
  EXPECT_EQ(g.good_indices.size(), 8u);
  EXPECT_EQ(g.bad_fraction, 0);
  EXPECT_EQ(g.interval_lengths, std::vector<std::size_t>(8, 50));
}

TEST(BlockDecompositionTest, SingleDeletionStaysInItsBlock) {
  std::mt19937_64 rng(2);
  BitString c = random_bits(500, rng);
  // Block 3 covers 201..300; delete position 250.
  BitString t = c.slice(1, 249) + c.slice(251, 500);
  BlockDecomposition b = optimal_block_decomposition(c, t, 5);
  EXPECT_EQ(b.total_raw, 1u);
  EXPECT_EQ(sum_raw(b), 1u);
  for (std::size_t j = 1; j <= 5; ++j) {
    EXPECT_EQ(b.per_block_raw[j - 1], j == 3 ? 1u : 0u) << "block " << j;
  }
  EXPECT_EQ(b.block_of(1), 1u);
  EXPECT_EQ(b.block_of(499), 5u);
  EXPECT_EQ(b.block_of(500), 0u);
}

TEST(BlockDecompositionTest, MatchesExhaustiveCutSearch) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 2;
    BitString c = random_bits(d * 5, rng);
    std::uniform_int_distribution<std::size_t> len(0, d * 5 + 3);
    BitString t = random_bits(len(rng), rng);
    BlockDecomposition b = optimal_block_decomposition(c, t, d);
    expect_partition(b, t.size());
    const std::size_t brute =
        oracle::brute_block_decomposition(c.to_string(), t.to_string(), d);
    EXPECT_EQ(sum_raw(b), brute) << c.to_string() << " / " << t.to_string();
    EXPECT_EQ(b.total_raw, brute);
  }
}

TEST(BlockDecompositionTest, PerBlockSumNeverExceedsTheGlobalDistance) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    BitString c = random_bits(8 * 300, rng);
    AttackResult a = random_insdel_channel(c, Rational(1, 100), rng());
    BlockDecomposition b = optimal_block_decomposition(c, a.word, 8);
    expect_partition(b, a.word.size());
    EXPECT_LE(sum_raw(b), raw_edit_distance(c, a.word));
    EXPECT_EQ(b.total_raw, a.distance.raw);
  }
}

TEST(BlockDecompositionTest, ClassifiesAgainstGamma) {
  BlockDecomposition b;
  b.d = 4;
  b.block_len = 10;
  b.intervals = {{1, 10}, {11, 18}, {19, 30}, {31, 40}};
  b.per_block_raw = {0, 2, 6, 0};
  b.per_block_ed = {Rational(0), Rational(1, 10), Rational(1, 4), Rational(0)};
  GammaGoodReport g = classify_gamma_good(b, Rational(1, 10));
  EXPECT_EQ(g.good_indices, (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(g.interval_lengths, (std::vector<std::size_t>{10, 8, 10}));
  EXPECT_EQ(g.bad_fraction, Rational(1, 4));
}

TEST(BlockDecompositionTest, RejectsRaggedBlocks) {
  EXPECT_THROW(optimal_block_decomposition(BitString(10), BitString(10), 3),
               ParamMismatch);
}

}  // namespace
}  // namespace crldc
