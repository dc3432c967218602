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


#include "crldc/adversaries.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>

#include "crldc/errors.hpp"

namespace crldc {

namespace {

std::atomic<std::size_t> g_checks{0};
std::atomic<std::size_t> g_violations{0};

AttackResult checked(std::string name, const BitString& c, BitString word,
                     Metric metric, const Rational& budget) {
  AttackResult out;
  out.name = std::move(name);
  out.metric = metric;
  out.budget = budget;
  out.distance = metric == Metric::kHamming ? hamming_distance(c, word)
                                            : edit_distance(c, word);
  out.word = std::move(word);
  ++g_checks;
  if (out.distance.normalized > budget) {
    ++g_violations;
    throw BudgetExceeded(out.name + " spent " + to_string(out.distance.normalized) +
                         " of a " + to_string(budget) + " " +
                         to_string(metric) + " budget");
  }
  return out;
}

void check_rho(const Rational& rho) {
  if (rho < 0 || rho > 1) {
    throw InvalidParam("budget " + to_string(rho) + " outside [0, 1]");
  }
}

// k distinct values of [0, n), in random order.
std::vector<std::size_t> distinct(std::size_t n, std::size_t k,
                                  std::mt19937_64& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t s = 0; s < k; ++s) {
    std::uniform_int_distribution<std::size_t> pick(s, n - 1);
    std::swap(all[s], all[pick(rng)]);
  }
  all.resize(k);
  return all;
}

BitString splice(const BitString& c, std::size_t first, std::size_t last,
                 const BitString& replacement) {
  BitString out = first > 1 ? c.slice(1, first - 1) : BitString();
  out.append(replacement);
  if (last < c.size()) out.append(c.slice(last + 1, c.size()));
  return out;
}

void check_hamming_word(const BitString& c, const HammingCode& code) {
  if (c.size() != code.params().K) {
    throw ParamMismatch("word of " + std::to_string(c.size()) +
                        " bits, code length " +
                        std::to_string(code.params().K));
  }
}

}  // namespace

BudgetAudit budget_audit() { return {g_checks.load(), g_violations.load()}; }

void reset_budget_audit() {
  g_checks = 0;
  g_violations = 0;
}

AttackResult random_hamming_channel(const BitString& c, const Rational& rho,
                                    std::uint64_t seed) {
  check_rho(rho);
  std::mt19937_64 rng(seed);
  const std::size_t flips = floor_size(rho * Rational(BigInt(c.size())));
  BitString word = c;
  for (std::size_t p : distinct(c.size(), flips, rng)) word.flip(p + 1);
  return checked("random-hamming", c, std::move(word), Metric::kHamming, rho);
}

AttackResult worst_block_hamming(const BitString& c, const Rational& rho,
                                 const HammingCode& code, std::uint64_t seed) {
  check_rho(rho);
  check_hamming_word(c, code);
  const auto& P = code.params();
  const std::size_t per_block = P.inner_radius + 1;
  const std::size_t wanted = floor_size(rho * Rational(BigInt(P.d)) / P.rho_in);
  const std::size_t affordable =
      floor_size(rho * Rational(BigInt(P.K))) / per_block;
  const std::size_t blocks = std::min({wanted, affordable, P.d});
  if (2 * blocks >= P.d) {
    throw BoundViolated("worst-block attack would destroy " +
                        std::to_string(blocks) + " of " + std::to_string(P.d) +
                        " blocks");
  }
  std::mt19937_64 rng(seed);
  const auto [first_symbol, symbols] = code.inner().weakest_chunk();
  BitString word = c;
  for (std::size_t j : distinct(P.d, blocks, rng)) {
    const std::size_t base = j * P.bl;
    for (std::size_t s : distinct(symbols, per_block, rng)) {
      std::uniform_int_distribution<std::size_t> bit(0, 7);
      word.flip(base + code.inner().symbol_first_bit(first_symbol + s) +
                bit(rng));
    }
  }
  return checked("worst-block", c, std::move(word), Metric::kHamming, rho);
}

AttackResult strawman_key_substitution(const BitString& c,
                                       const HammingEncoding& debug,
                                       const HammingCode& code,
                                       const Rational& rho,
                                       std::uint64_t seed) {
  check_rho(rho);
  check_hamming_word(c, code);
  const auto& P = code.params();
  if (Rational(BigInt(P.bl), BigInt(P.K)) > rho) {
    throw BudgetExceeded("one block is " + std::to_string(P.bl) + " of " +
                         std::to_string(P.K) + " bits, over the " +
                         to_string(rho) + " budget");
  }
  if (debug.blocks.empty()) throw ConfigInvalid("strawman needs block bounds");
  std::mt19937_64 rng(seed);
  SignatureKeyPair own = code.scheme().gen(rng);
  SignedBlockPayload forged;
  forged.x_block = code.read_block(c, 1).x_block.complement();
  forged.sigma = code.scheme().sign(
      own.sk, signed_message(forged.x_block, 1, P.index_bits));
  forged.pk = own.pk;
  forged.index = 1;
  const auto [first, last] = debug.blocks.front();
  BitString word = splice(c, first, last, code.encode_payload(forged));
  return checked("strawman", c, std::move(word), Metric::kHamming, rho);
}

AttackResult swap_blocks_hamming(const BitString& c, const HammingCode& code,
                                 const Rational& rho, std::uint64_t seed) {
  check_rho(rho);
  check_hamming_word(c, code);
  const auto& P = code.params();
  if (P.d < 2) throw InvalidParam("swap needs at least two blocks");
  std::mt19937_64 rng(seed);
  auto pair = distinct(P.d, 2, rng);
  std::sort(pair.begin(), pair.end());
  auto block = [&](std::size_t j) {
    return c.slice(j * P.bl + 1, (j + 1) * P.bl);
  };
  BitString word = splice(c, pair[0] * P.bl + 1, (pair[0] + 1) * P.bl,
                          block(pair[1]));
  word = splice(word, pair[1] * P.bl + 1, (pair[1] + 1) * P.bl, block(pair[0]));
  return checked("swap", c, std::move(word), Metric::kHamming, rho);
}

AttackResult rotation_insdel(const BitString& c, std::size_t block_len,
                             const Rational& rho) {
  check_rho(rho);
  if (block_len < 2 || c.size() % block_len != 0) {
    throw ParamMismatch("block length " + std::to_string(block_len) +
                        " does not tile a " + std::to_string(c.size()) +
                        "-bit word");
  }
  const std::size_t n = c.size();
  const std::size_t half = block_len / 2;
  // C^(d) = C_0 . C_1 with |C_0| = half.
  const std::size_t split = n - block_len + half;
  BitString word = c.slice(split + 1, n);
  word.append(c.slice(1, split));
  return checked("rotation", c, std::move(word), Metric::kEdit, rho);
}

AttackResult random_insdel_channel(const BitString& c, const Rational& rho,
                                   std::uint64_t seed) {
  check_rho(rho);
  std::mt19937_64 rng(seed);
  const std::size_t edits =
      floor_size(rho * Rational(BigInt(2 * c.size())));
  auto raw = c.raw();
  std::vector<std::uint8_t> bits(raw.begin(), raw.end());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t e = 0; e < edits; ++e) {
    if (coin(rng) && !bits.empty()) {
      std::uniform_int_distribution<std::size_t> at(0, bits.size() - 1);
      bits.erase(bits.begin() + static_cast<long>(at(rng)));
    } else {
      std::uniform_int_distribution<std::size_t> at(0, bits.size());
      const std::size_t p = at(rng);
      bits.insert(bits.begin() + static_cast<long>(p),
                  static_cast<std::uint8_t>(coin(rng)));
    }
  }
  BitString word(bits.size());
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (bits[p]) word.set_bit(p + 1, true);
  }
  return checked("random-insdel", c, std::move(word), Metric::kEdit, rho);
}

std::vector<std::string> attack_names() {
  return {"none",   "random-hamming", "worst-block",  "strawman",
          "swap",   "rotation",       "random-insdel"};
}

AttackResult run_attack(const std::string& name, const AttackContext& ctx) {
  if (ctx.codeword == nullptr) throw ConfigInvalid("attack without a codeword");
  const BitString& c = *ctx.codeword;
  auto need_hamming = [&]() -> const HammingCode& {
    if (ctx.hamming == nullptr) {
      throw ConfigInvalid("attack '" + name + "' needs the Hamming code");
    }
    return *ctx.hamming;
  };
  if (name == "none") {
    Metric metric = ctx.insdel != nullptr ? Metric::kEdit : Metric::kHamming;
    return checked("none", c, c, metric, ctx.rho);
  }
  if (name == "random-hamming") {
    return random_hamming_channel(c, ctx.rho, ctx.seed);
  }
  if (name == "worst-block") {
    return worst_block_hamming(c, ctx.rho, need_hamming(), ctx.seed);
  }
  if (name == "strawman") {
    if (ctx.hamming_debug == nullptr) {
      throw ConfigInvalid("attack 'strawman' needs encoder debug output");
    }
    return strawman_key_substitution(c, *ctx.hamming_debug, need_hamming(),
                                     ctx.rho, ctx.seed);
  }
  if (name == "swap") {
    return swap_blocks_hamming(c, need_hamming(), ctx.rho, ctx.seed);
  }
  if (name == "rotation") {
    if (ctx.insdel == nullptr) {
      throw ConfigInvalid("attack 'rotation' needs the InsDel code");
    }
    return rotation_insdel(c, ctx.insdel->params().block_len, ctx.rho);
  }
  if (name == "random-insdel") {
    return random_insdel_channel(c, ctx.rho, ctx.seed);
  }
  throw ConfigInvalid("unknown attack '" + name + "'");
}

}  // namespace crldc
