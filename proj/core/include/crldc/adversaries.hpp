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
#include <string>
#include <vector>

#include "crldc/bitstring.hpp"
#include "crldc/distance.hpp"
#include "crldc/hamming_crldc.hpp"
#include "crldc/insdel_crldc.hpp"
#include "crldc/rational.hpp"

namespace crldc {

// A corrupted word together with the exact distance it was checked at.
struct AttackResult {
  std::string name;
  BitString word;
  Metric metric = Metric::kHamming;
  Rational budget;
  DistanceReport distance;
};

// Process-wide tally of post-hoc budget checks. Every attack ends with one
// check; a violation is counted and then raised as BudgetExceeded.
struct BudgetAudit {
  std::size_t checks = 0;
  std::size_t violations = 0;
};
BudgetAudit budget_audit();
void reset_budget_audit();

// Flips exactly floor(rho |c|) distinct uniformly chosen positions.
AttackResult random_hamming_channel(const BitString& c, const Rational& rho,
                                    std::uint64_t seed);

// Pushes whole blocks one flip past the inner radius, with the flips in
// distinct symbols of the weakest chunk. The block count is
// floor(rho d / rho_in), cut down to what floor(rho K) flips can pay for.
// Throws BoundViolated if that would reach d / 2 bad blocks.
AttackResult worst_block_hamming(const BitString& c, const Rational& rho,
                                 const HammingCode& code, std::uint64_t seed);

// Replaces block 1 with a block carrying the complement of x_1, signed under
// a key pair the adversary generates itself. Throws BudgetExceeded when one
// block does not fit in rho (bl / K > rho).
AttackResult strawman_key_substitution(const BitString& c,
                                       const HammingEncoding& debug,
                                       const HammingCode& code,
                                       const Rational& rho,
                                       std::uint64_t seed);

// Exchanges two distinct uniformly chosen blocks.
AttackResult swap_blocks_hamming(const BitString& c, const HammingCode& code,
                                 const Rational& rho, std::uint64_t seed);

// Moves the second half of the last block to the front:
// C_1^(d) . C^(1) ... C^(d-1) . C_0^(d). Deterministic; rho is the budget
// the result is checked against.
AttackResult rotation_insdel(const BitString& c, std::size_t block_len,
                             const Rational& rho);

// floor(2 rho |c|) edits, each an insertion of a random bit or a deletion
// at a uniform position with probability 1/2.
AttackResult random_insdel_channel(const BitString& c, const Rational& rho,
                                   std::uint64_t seed);

// What a named attack may see. Fields an attack needs but does not get
// raise ConfigInvalid.
struct AttackContext {
  const BitString* codeword = nullptr;
  Rational rho;
  std::uint64_t seed = 0;
  const HammingCode* hamming = nullptr;
  const HammingEncoding* hamming_debug = nullptr;
  const InsDelCode* insdel = nullptr;
};

// "none", "random-hamming", "worst-block", "strawman", "swap", "rotation",
// "random-insdel".
std::vector<std::string> attack_names();
AttackResult run_attack(const std::string& name, const AttackContext& ctx);

}  // namespace crldc
