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


// Acceptance suite at desk scale (k = 1024, r = 128 unless noted). Prints
// one PASS or FAIL line per criterion and exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crldc/adversaries.hpp"
#include "crldc/block_decomposition.hpp"
#include "crldc/errors.hpp"
#include "crldc/forgery.hpp"
#include "crldc/harness.hpp"
#include "crldc/hamming_crldc.hpp"
#include "crldc/inner_insdel.hpp"
#include "crldc/insdel_crldc.hpp"
#include "crldc/oracle.hpp"
#include "crldc/stats.hpp"

namespace {

using namespace crldc;

// Pinned tolerances.
constexpr std::size_t kCompletenessTriples = 1000;
constexpr std::size_t kLocalityRuns = 500;
constexpr std::size_t kHammingLocality = 43344;
constexpr std::size_t kLargeK = 16384;  // d = 128, one block fits in rho K
constexpr std::size_t kStrawmanTrials = 200;
constexpr std::size_t kSwapTrials = 200;
constexpr std::size_t kLimitInstances = 20;
constexpr std::size_t kGoodSetTrials = 200;
constexpr std::size_t kDensityEncodings = 200;
constexpr std::size_t kEditScripts = 1000;
constexpr std::size_t kBlockDecPositions = 2000;
constexpr std::size_t kSearchSamples = 500;
constexpr std::size_t kRotationTrials = 100;
constexpr std::size_t kForgeryTrials = 1000;

struct Verdict {
  bool pass = false;
  std::string detail;
};

// Foreign signature acceptances summed over every full-decoder sweep.
std::size_t g_foreign = 0;
std::size_t g_sweeps = 0;

void count_foreign(const std::vector<InstanceCounts>& counts) {
  ++g_sweeps;
  for (const InstanceCounts& c : counts) g_foreign += c.foreign_acceptances;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

ExperimentConfig desk(CodeKind code) {
  ExperimentConfig c;
  c.code = code;
  c.seed = 20260101;
  return c;
}

Verdict completeness() {
  std::size_t failures = 0;
  std::size_t runs = 0;
  for (CodeKind kind : {CodeKind::kHamming, CodeKind::kInsDel}) {
    Experiment e(desk(kind));
    std::mt19937_64 rng(kind == CodeKind::kHamming ? 1 : 2);
    std::uniform_int_distribution<std::size_t> pick(1, e.k());
    for (std::size_t n = 0; n < kCompletenessTriples; ++n) {
      Instance inst = e.encode_only(n);
      const std::size_t i = pick(rng);
      ReceivedWordOracle oracle(inst.codeword);
      DecodeOutcome out = e.decode(oracle, i, rng());
      ++runs;
      if (!out.value || *out.value != inst.x.bit(i)) ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " failures in " +
                             std::to_string(runs) + " clean decodes"};
}

Verdict hamming_locality() {
  ExperimentConfig c = desk(CodeKind::kHamming);
  c.attack = "worst-block";
  c.trials = (kLocalityRuns + 39) / 40;  // 40 probed indices per instance
  LocalityReport r = audit_locality(c);
  const bool ok = r.runs >= kLocalityRuns && r.violations == 0 &&
                  r.max_queries <= kHammingLocality &&
                  r.bound == static_cast<double>(kHammingLocality);
  return {ok, std::to_string(r.runs) + " runs, queries in [" +
                  std::to_string(r.min_queries) + ", " +
                  std::to_string(r.max_queries) + "], bound " +
                  fmt(r.bound) + ", violations " +
                  std::to_string(r.violations)};
}

std::vector<std::size_t> block_indices(std::size_t j, std::size_t r) {
  std::vector<std::size_t> out;
  for (std::size_t i = (j - 1) * r + 1; i <= j * r; ++i) out.push_back(i);
  return out;
}

Verdict strawman() {
  ExperimentConfig c = desk(CodeKind::kHamming);
  c.k = kLargeK;
  c.attack = "strawman";
  c.trials = kStrawmanTrials;
  c.selection = IndexSelection::kList;
  c.indices = block_indices(1, c.r);
  c.decoder = DecoderKind::kStrawman;
  auto weak = run_trials(Experiment(c), false);
  c.decoder = DecoderKind::kFull;
  auto full = run_trials(Experiment(c), false);
  count_foreign(full);
  std::size_t weak_total = 0, weak_wrong = 0, full_total = 0, full_wrong = 0;
  for (const IndexCounts& ic : weak[0].indices) {
    weak_total += ic.trials;
    weak_wrong += ic.wrong;
  }
  for (const IndexCounts& ic : full[0].indices) {
    full_total += ic.trials;
    full_wrong += ic.wrong;
  }
  const bool ok = weak_total > 0 && weak_wrong == weak_total &&
                  full_wrong == 0 && weak[0].foreign_acceptances > 0;
  return {ok, "strawman wrong " + std::to_string(weak_wrong) + "/" +
                  std::to_string(weak_total) + " (foreign acceptances " +
                  std::to_string(weak[0].foreign_acceptances) +
                  "); full wrong " + std::to_string(full_wrong) + "/" +
                  std::to_string(full_total)};
}

Verdict swap() {
  ExperimentConfig c = desk(CodeKind::kHamming);
  c.k = kLargeK;
  c.attack = "swap";
  c.trials = kSwapTrials;
  Experiment e(c);
  Instance inst = e.make_instance(0);
  // Probe exactly the two exchanged blocks.
  std::vector<std::size_t> swapped;
  for (std::size_t j = 1; j <= e.d(); ++j) {
    const auto [a, b] = inst.blocks[j - 1];
    if (inst.attack.word.slice(a, b) != inst.codeword.slice(a, b)) {
      swapped.push_back(j);
    }
  }
  if (swapped.size() != 2) return {false, "swap changed " +
                                              std::to_string(swapped.size()) +
                                              " blocks"};
  c.selection = IndexSelection::kList;
  for (std::size_t j : swapped) {
    for (std::size_t i : block_indices(j, c.r)) c.indices.push_back(i);
  }
  auto counts = run_trials(Experiment(c), false);
  count_foreign(counts);
  std::size_t total = 0, wrong = 0, correct = 0;
  for (const IndexCounts& ic : counts[0].indices) {
    total += ic.trials;
    wrong += ic.wrong;
    correct += ic.correct;
  }
  return {wrong == 0, "blocks " + std::to_string(swapped[0]) + " and " +
                          std::to_string(swapped[1]) + ": wrong " +
                          std::to_string(wrong) + ", correct " +
                          std::to_string(correct) + " of " +
                          std::to_string(total)};
}

Verdict good_set_hamming() {
  ExperimentConfig c = desk(CodeKind::kHamming);
  c.attack = "worst-block";
  c.trials = kGoodSetTrials;
  c.instances = kLimitInstances;
  LimitReport r = estimate_limit(c);
  count_foreign(r.counts);
  std::size_t ok_outputs = 0, outputs = 0;
  for (const InstanceCounts& ic : r.counts) {
    for (const IndexCounts& x : ic.indices) {
      outputs += x.trials;
      ok_outputs += x.correct + x.bottom;
    }
  }
  const bool ok = r.instances.size() == kLimitInstances &&
                  2 * r.min_good >= r.k;
  return {ok, "min |Good| " + std::to_string(r.min_good) + " of k = " +
                  std::to_string(r.k) + " over " +
                  std::to_string(r.instances.size()) +
                  " instances; {x_i, bottom} fraction " +
                  fmt(static_cast<double>(ok_outputs) / outputs)};
}

bool dense(const BitString& c, std::size_t w) {
  auto raw = c.raw();
  if (raw.size() < w) return true;
  std::size_t weight = 0;
  for (std::size_t p = 0; p < w; ++p) weight += raw[p];
  for (std::size_t s = 0;; ++s) {
    if (5 * weight < 2 * w) return false;
    if (s + w >= raw.size()) return true;
    weight += raw[s + w];
    weight -= raw[s];
  }
}

Verdict inner_insdel() {
  Experiment e(desk(CodeKind::kInsDel));
  const InnerInsDelCode& code = e.insdel()->inner();
  std::mt19937_64 rng(6);
  std::size_t sparse = 0;
  for (std::size_t n = 0; n < kDensityEncodings; ++n) {
    if (!dense(code.encode(random_bits(code.message_len(), rng)),
               code.density_window())) {
      ++sparse;
    }
  }
  std::size_t recovered = 0;
  std::size_t max_ed = 0;
  std::uniform_int_distribution<std::size_t> count(1, code.edit_capacity());
  for (std::size_t n = 0; n < kEditScripts; ++n) {
    BitString m = random_bits(code.message_len(), rng);
    BitString c = code.encode(m);
    std::vector<std::uint8_t> v(c.raw().begin(), c.raw().end());
    const std::size_t edits = count(rng);
    for (std::size_t s = 0; s < edits; ++s) {
      if (rng() & 1) {
        std::uniform_int_distribution<std::size_t> at(0, v.size() - 1);
        v.erase(v.begin() + static_cast<long>(at(rng)));
      } else {
        std::uniform_int_distribution<std::size_t> at(0, v.size());
        v.insert(v.begin() + static_cast<long>(at(rng)),
                 static_cast<std::uint8_t>(rng() & 1));
      }
    }
    BitString y(v.size());
    for (std::size_t p = 0; p < v.size(); ++p) y.set_bit(p + 1, v[p] != 0);
    max_ed = std::max(max_ed, raw_edit_distance(c, y));
    auto got = code.decode(y);
    if (got && *got == m) ++recovered;
  }
  const bool ok = sparse == 0 && recovered == kEditScripts &&
                  max_ed <= code.edit_capacity();
  return {ok, std::to_string(sparse) + " sparse encodings of " +
                  std::to_string(kDensityEncodings) + " (window " +
                  std::to_string(code.density_window()) + "); recovered " +
                  std::to_string(recovered) + "/" +
                  std::to_string(kEditScripts) + " scripts, max ED " +
                  std::to_string(max_ed) + " <= " +
                  std::to_string(code.edit_capacity())};
}

Verdict gamma_good() {
  ExperimentConfig c = desk(CodeKind::kInsDel);
  c.attack = "random-insdel";
  c.instances = kLimitInstances;
  BlockMapReport r = blockmap(c);
  Rational worst(0);
  for (const BlockMapInstance& b : r.instances) {
    worst = std::max(worst, b.gamma.bad_fraction);
  }
  return {r.violations == 0 && r.instances.size() == kLimitInstances,
          std::to_string(r.instances.size()) + " instances, worst bad " +
              "fraction " + to_string(worst) + " <= " +
              to_string(r.bad_fraction_bound) + ", lengths in [" +
              std::to_string(r.min_length) + ", " +
              std::to_string(r.max_length) + "], violations " +
              std::to_string(r.violations)};
}

// Pools sampled positions from several corrupted instances.
Verdict block_dec() {
  std::size_t positions = 0, failures = 0;
  for (const char* attack : {"random-insdel", "rotation"}) {
    ExperimentConfig c = desk(CodeKind::kInsDel);
    c.attack = attack;
    Experiment e(c);
    const Rational gamma = e.insdel()->params().gamma;
    for (std::size_t n = 0; n < 4; ++n) {
      Instance inst = e.make_instance(n);
      auto decomp =
          optimal_block_decomposition(inst.codeword, inst.attack.word, e.d());
      BlockDecAudit a = audit_block_dec(e, inst, decomp, gamma,
                                        kBlockDecPositions / 8,
                                        derive_seed(c.seed, {8, n}));
      positions += a.positions;
      failures += a.failures;
    }
  }
  ExperimentConfig clean_cfg = desk(CodeKind::kInsDel);
  Experiment clean(clean_cfg);
  Instance inst = clean.make_instance(0);
  auto decomp =
      optimal_block_decomposition(inst.codeword, inst.attack.word, clean.d());
  BlockDecAudit c = audit_block_dec(clean, inst, decomp,
                                    clean.insdel()->params().gamma,
                                    kBlockDecPositions, 99);
  const double gamma = to_double(clean.insdel()->params().gamma);
  const WilsonInterval w = wilson_interval(failures, positions);
  const bool ok = positions >= kBlockDecPositions && w.low <= gamma &&
                  c.failures == 0 && c.positions >= kBlockDecPositions;
  return {ok, std::to_string(failures) + "/" + std::to_string(positions) +
                  " failures, Wilson low " + fmt(w.low) + " vs gamma " +
                  fmt(gamma) + "; clean " + std::to_string(c.failures) + "/" +
                  std::to_string(c.positions)};
}

Verdict nbs() {
  ExperimentConfig c = desk(CodeKind::kInsDel);
  c.attack = "rotation";
  Experiment e(c);
  const Rational gamma = e.insdel()->params().gamma;
  std::size_t samples = 0, failures = 0;
  for (std::size_t n = 0; n < 4; ++n) {
    Instance inst = e.make_instance(n);
    auto decomp =
        optimal_block_decomposition(inst.codeword, inst.attack.word, e.d());
    GammaGoodReport g = classify_gamma_good(decomp, gamma);
    SearchAudit a = audit_nbs(e, inst, g, kSearchSamples / 4,
                              derive_seed(c.seed, {9, n}));
    samples += a.samples;
    failures += a.failures;
  }
  Experiment clean(desk(CodeKind::kInsDel));
  Instance inst = clean.make_instance(0);
  auto decomp =
      optimal_block_decomposition(inst.codeword, inst.attack.word, clean.d());
  GammaGoodReport g = classify_gamma_good(decomp, gamma);
  SearchAudit ca = audit_nbs(clean, inst, g, kSearchSamples, 91);
  const double rho_star = to_double(e.insdel()->params().rho_star);
  const WilsonInterval w = wilson_interval(failures, samples);
  const bool ok = samples >= kSearchSamples && w.low <= rho_star &&
                  ca.failures == 0 && ca.samples >= kSearchSamples;
  return {ok, std::to_string(failures) + "/" + std::to_string(samples) +
                  " failures under rotation, Wilson low " + fmt(w.low) +
                  " vs rho* " + fmt(rho_star) + "; clean " +
                  std::to_string(ca.failures) + "/" +
                  std::to_string(ca.samples)};
}

Verdict rotation() {
  ExperimentConfig c = desk(CodeKind::kInsDel);
  c.attack = "rotation";
  c.trials = kRotationTrials;
  c.instances = kLimitInstances;
  LimitReport full = estimate_limit(c);
  count_foreign(full.counts);
  c.decoder = DecoderKind::kPositional;
  LimitReport positional = estimate_limit(c);
  std::size_t positional_max = 0;
  for (const LimitInstance& li : positional.instances) {
    positional_max = std::max(positional_max, li.good);
  }
  const Rational need = full.delta * Rational(BigInt(full.k));
  const bool ok = full.instances.size() == kLimitInstances &&
                  Rational(BigInt(full.min_good)) >= need &&
                  positional_max == 0;
  return {ok, "full min |Good| " + std::to_string(full.min_good) +
                  " >= delta k = " + fmt(to_double(need)) +
                  "; positional max |Good| " + std::to_string(positional_max)};
}

Verdict forgery() {
  auto scheme = make_signature_scheme("schnorr", 128);
  std::size_t wins = 0;
  std::string names;
  std::uint64_t seed = 11;
  for (auto& adv : shipped_forgery_adversaries(*scheme)) {
    ForgeryGameResult r = run_forgery_game(*scheme, *adv, kForgeryTrials, seed++);
    wins += r.wins;
    names += (names.empty() ? "" : ", ") + adv->name() + " " +
             std::to_string(r.wins) + "/" + std::to_string(r.trials);
  }
  const bool ok = wins == 0 && g_foreign == 0 && g_sweeps > 0;
  return {ok, names + "; foreign acceptances " + std::to_string(g_foreign) +
                  " over " + std::to_string(g_sweeps) + " full-decoder sweeps"};
}

Verdict identities() {
  std::vector<std::string> bad;
  if (hamming_mu_for_target(Rational(1, 4), 2.0 / 3.0) != 27) bad.push_back("mu");
  Experiment h(desk(CodeKind::kHamming));
  const HammingParams& hp = h.hamming()->params();
  if (hp.rho != hp.c * hp.rho_in) bad.push_back("rho = c rho_in");
  Experiment e(desk(CodeKind::kInsDel));
  const InsDelParams& p = e.insdel()->params();
  if (p.beta != 2 * p.alpha + 1 / p.beta_sz) bad.push_back("beta");
  if (p.delta + 2 * p.beta * p.rho / (p.gamma * p.alpha) != 1) {
    bad.push_back("delta");
  }
  std::string detail = "mu " + std::to_string(hamming_mu_for_target(
                                   Rational(1, 4), 2.0 / 3.0)) +
                       ", beta " + to_string(p.beta) + ", delta " +
                       to_string(p.delta) + ", rho_h " + to_string(hp.rho);
  for (const std::string& b : bad) detail += "; broken: " + b;
  return {bad.empty(), detail};
}

Verdict budget() {
  BudgetAudit a = budget_audit();
  return {a.checks > 0 && a.violations == 0,
          std::to_string(a.checks) + " adversary invocations checked, " +
              std::to_string(a.violations) + " violations"};
}

}  // namespace

int main() {
  reset_budget_audit();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria =
      {{"perfect completeness", completeness},
       {"Hamming locality", hamming_locality},
       {"strawman reproduction", strawman},
       {"swap defense", swap},
       {"Hamming good set", good_set_hamming},
       {"inner InsDel conformance", inner_insdel},
       {"gamma-good accounting", gamma_good},
       {"BlockDec guarantee", block_dec},
       {"NBS guarantee", nbs},
       {"rotation defense", rotation},
       {"forgery game and Ver log", forgery},
       {"parameter identities", identities},
       {"budget soundness", budget}};
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[n].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%s %2zu %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", n + 1,
                criteria[n].first.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
