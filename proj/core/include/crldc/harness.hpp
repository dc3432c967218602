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
#include <string>
#include <utility>
#include <vector>

#include "crldc/adversaries.hpp"
#include "crldc/bitstring.hpp"
#include "crldc/block_decomposition.hpp"
#include "crldc/hamming_crldc.hpp"
#include "crldc/insdel_crldc.hpp"
#include "crldc/oracle.hpp"
#include "crldc/rational.hpp"
#include "crldc/sigscheme.hpp"

namespace crldc {

enum class CodeKind { kHamming, kInsDel };
enum class DecoderKind { kFull, kStrawman, kPositional };
enum class IndexSelection { kDefault, kAll, kList };

// Everything that determines a run. Identical configs give identical
// reports.
struct ExperimentConfig {
  CodeKind code = CodeKind::kHamming;
  std::size_t lambda = 128;
  std::size_t k = 1024;
  std::size_t r = 128;
  std::optional<std::size_t> mu;  // derived from target_p when unset
  double target_p = 2.0 / 3.0;
  // Hamming path.
  Rational c = Rational(1, 4);
  Rational beta_in = Rational(1, 4);
  // InsDel path.
  Rational rho_star = Rational(1, 10);
  std::optional<std::size_t> buffer_len = kDeskBufferLen;
  Rational operating_fraction = Rational(1, 2);
  double slack = 1.5;
  // Corruption. An unset rho means the attack's default budget.
  std::string attack = "none";
  std::optional<Rational> rho;
  DecoderKind decoder = DecoderKind::kFull;
  std::size_t trials = 200;
  // kDefault probes one index per block plus 32 random ones for fool and
  // every index for limit.
  IndexSelection selection = IndexSelection::kDefault;
  std::vector<std::size_t> indices;
  std::size_t instances = 1;
  std::uint64_t seed = 1;
};

// JSON text in, validated config out. Unknown keys and bad values raise
// ConfigInvalid.
ExperimentConfig parse_config(const std::string& text);
std::string config_to_json(const ExperimentConfig& config);
std::string to_string(CodeKind code);
std::string to_string(DecoderKind decoder);

// One encoded and attacked codeword.
struct Instance {
  std::size_t number = 0;
  BitString x;
  BitString pk;
  BitString codeword;
  std::vector<SignedBlockPayload> payloads;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  AttackResult attack;
};

// The code, scheme and decoder selected by a config.
class Experiment {
 public:
  // Throws ConfigInvalid for combinations that make no sense.
  explicit Experiment(ExperimentConfig config);
  ~Experiment();

  const ExperimentConfig& config() const { return config_; }
  const HammingCode* hamming() const { return hamming_.get(); }
  const InsDelCode* insdel() const { return insdel_.get(); }
  const RecordingScheme& recorder() const { return *recorder_; }

  std::size_t k() const;
  std::size_t r() const;
  std::size_t d() const;
  std::size_t codeword_len() const;
  std::size_t block_len() const;
  std::size_t mu() const;
  // Budget used when the config leaves rho unset: block_len / K for the
  // rotation, 0 for "none", the code's rho otherwise.
  Rational budget() const;
  // Fool threshold and Limit fraction of the code.
  double threshold_p() const;
  Rational delta() const;

  Instance make_instance(std::size_t number) const;
  Instance encode_only(std::size_t number) const;
  AttackResult corrupt(const Instance& clean, std::size_t number) const;

  DecodeOutcome decode(ReceivedWordOracle& oracle, std::size_t i,
                       std::uint64_t seed) const;
  std::uint64_t trial_seed(std::size_t instance, std::size_t block,
                           std::size_t trial) const;
  std::vector<std::size_t> probe_indices(std::size_t instance,
                                         bool for_limit) const;

 private:
  ExperimentConfig config_;
  std::unique_ptr<SignatureScheme> scheme_;
  std::unique_ptr<RecordingScheme> recorder_;
  std::unique_ptr<HammingCode> hamming_;
  std::unique_ptr<InsDelCode> insdel_;
};

struct IndexCounts {
  std::size_t index = 0;
  std::size_t trials = 0;
  std::size_t correct = 0;
  std::size_t bottom = 0;
  std::size_t wrong = 0;
};

struct InstanceCounts {
  std::size_t instance = 0;
  std::string attack;
  std::size_t distance_raw = 0;
  Rational distance;
  Rational budget;
  std::vector<IndexCounts> indices;
  // Signature checks the decoder accepted that the encoder never issued.
  std::size_t foreign_acceptances = 0;
  std::size_t accepted = 0;
};

// Runs config.trials decoder trials per probed index. Trial seeds depend on
// (instance, block, trial), so probes that share a block share one decoder
// run; the bit for each index is read off the verified block.
std::vector<InstanceCounts> run_trials(const Experiment& experiment,
                                       bool for_limit);

struct FoolReport {
  double threshold = 0;
  std::vector<InstanceCounts> instances;
  double min_rate = 1;
  std::size_t min_instance = 0;
  std::size_t min_index = 0;
  double margin = 0;  // rate minus its 99% Wilson lower bound
  bool fooled = false;
  std::size_t wrong_bits = 0;
  std::size_t foreign_acceptances = 0;
};
FoolReport estimate_fool(const ExperimentConfig& config);

struct LimitInstance {
  std::size_t instance = 0;
  std::size_t probed = 0;
  std::size_t good = 0;
  std::vector<std::size_t> good_per_block;
  std::size_t wrong_bits = 0;
};

struct LimitReport {
  Rational delta;
  std::size_t k = 0;
  std::vector<LimitInstance> instances;
  std::vector<InstanceCounts> counts;
  std::size_t min_good = 0;
  // Instances whose good fraction of probed indices is below delta.
  std::size_t limited_instances = 0;
  bool limited = false;
};
LimitReport estimate_limit(const ExperimentConfig& config);

struct LocalityReport {
  std::size_t runs = 0;
  std::size_t min_queries = 0;
  std::size_t max_queries = 0;
  double mean_queries = 0;
  double bound = 0;
  std::size_t violations = 0;
  // NBS audit, InsDel only.
  std::size_t search_runs = 0;
  std::size_t search_max_queries = 0;
  double search_bound = 0;
  std::size_t search_violations = 0;
  bool ok() const { return violations == 0 && search_violations == 0; }
};
LocalityReport audit_locality(const ExperimentConfig& config);

struct WorksheetLine {
  std::string name;
  std::string formula;
  std::string value;
};
std::vector<WorksheetLine> param_worksheet(const ExperimentConfig& config);

struct BlockMapInstance {
  std::size_t instance = 0;
  BlockDecomposition decomposition;
  GammaGoodReport gamma;
  bool fraction_ok = false;
  std::size_t length_violations = 0;
};

struct BlockMapReport {
  Rational gamma;
  Rational bad_fraction_bound;  // 2 beta rho / (gamma alpha)
  std::size_t min_length = 0;   // floor((beta - alpha gamma) tau)
  std::size_t max_length = 0;   // ceil((beta + alpha gamma) tau)
  std::vector<BlockMapInstance> instances;
  std::size_t violations = 0;
};
// InsDel only; throws ConfigInvalid for Hamming configs.
BlockMapReport blockmap(const ExperimentConfig& config);

// Positional BlockDec failures over positions of gamma-good blocks.
struct BlockDecAudit {
  std::size_t positions = 0;
  std::size_t failures = 0;
  double upper = 0;  // 99% Wilson upper bound of the failure rate
};
BlockDecAudit audit_block_dec(const Experiment& experiment,
                              const Instance& instance,
                              const BlockDecomposition& decomposition,
                              const Rational& gamma, std::size_t samples,
                              std::uint64_t seed);

// NBS failures over gamma-good target blocks.
struct SearchAudit {
  std::size_t samples = 0;
  std::size_t failures = 0;
  double upper = 0;
};
SearchAudit audit_nbs(const Experiment& experiment, const Instance& instance,
                      const GammaGoodReport& gamma, std::size_t samples,
                      std::uint64_t seed);

std::string to_json(const FoolReport& report);
std::string to_json(const LimitReport& report);
std::string to_json(const LocalityReport& report);
std::string to_json(const std::vector<WorksheetLine>& worksheet);
std::string to_json(const BlockMapReport& report);
// Flat table, one row per (instance, index).
std::string to_csv(const std::vector<InstanceCounts>& counts);

}  // namespace crldc
