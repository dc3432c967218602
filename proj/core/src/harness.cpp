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


#include "crldc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "crldc/errors.hpp"
#include "crldc/stats.hpp"
#include "json.hpp"

namespace crldc {

using nlohmann::json;

namespace {

// Tags for derive_seed paths.
enum SeedTag : std::uint64_t {
  kMessageTag = 1,
  kKeyTag = 2,
  kAttackTag = 3,
  kTrialTag = 4,
  kProbeTag = 5,
  kAuditTag = 6,
};

Rational rational_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
  throw ConfigInvalid(std::string("'") + key +
                      "' must be a rational string such as \"1/4\"");
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    throw ConfigInvalid(std::string("'") + key +
                        "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

void validate(const ExperimentConfig& c) {
  if (c.k == 0) throw ConfigInvalid("k must be positive");
  if (c.r != c.lambda) {
    throw ConfigInvalid("r must equal lambda (signatures are r bits)");
  }
  if (c.trials == 0) throw ConfigInvalid("trials must be positive");
  if (c.instances == 0) throw ConfigInvalid("instances must be positive");
  if (c.selection == IndexSelection::kList) {
    if (c.indices.empty()) throw ConfigInvalid("empty index list");
    for (std::size_t i : c.indices) {
      if (i < 1 || i > c.k) {
        throw ConfigInvalid("index " + std::to_string(i) + " outside [1, k]");
      }
    }
  }
  const auto names = attack_names();
  if (std::find(names.begin(), names.end(), c.attack) == names.end()) {
    throw ConfigInvalid("unknown attack '" + c.attack + "'");
  }
  const bool edit_attack = c.attack == "rotation" || c.attack == "random-insdel";
  const bool flip_attack = c.attack != "none" && !edit_attack;
  if ((c.code == CodeKind::kHamming && edit_attack) ||
      (c.code == CodeKind::kInsDel && flip_attack)) {
    throw ConfigInvalid("attack '" + c.attack + "' does not apply to the " +
                        to_string(c.code) + " code");
  }
  if (c.decoder == DecoderKind::kStrawman && c.code != CodeKind::kHamming) {
    throw ConfigInvalid("the strawman decoder exists for the Hamming code");
  }
  if (c.decoder == DecoderKind::kPositional && c.code != CodeKind::kInsDel) {
    throw ConfigInvalid("the positional decoder exists for the InsDel code");
  }
  if (c.rho && (*c.rho < 0 || *c.rho > 1)) {
    throw ConfigInvalid("rho outside [0, 1]");
  }
  if (!(c.target_p > 0 && c.target_p < 1)) {
    throw ConfigInvalid("target_p outside (0, 1)");
  }
}

json counts_json(const InstanceCounts& c) {
  json rows = json::array();
  for (const IndexCounts& ic : c.indices) {
    rows.push_back({{"index", ic.index},
                    {"trials", ic.trials},
                    {"correct", ic.correct},
                    {"bottom", ic.bottom},
                    {"wrong", ic.wrong}});
  }
  return {{"instance", c.instance},
          {"attack", c.attack},
          {"distance_raw", c.distance_raw},
          {"distance", to_string(c.distance)},
          {"budget", to_string(c.budget)},
          {"accepted_signatures", c.accepted},
          {"foreign_acceptances", c.foreign_acceptances},
          {"indices", rows}};
}

}  // namespace

std::string to_string(CodeKind code) {
  return code == CodeKind::kHamming ? "hamming" : "insdel";
}

std::string to_string(DecoderKind decoder) {
  switch (decoder) {
    case DecoderKind::kFull:
      return "full";
    case DecoderKind::kStrawman:
      return "strawman";
    case DecoderKind::kPositional:
      return "positional";
  }
  return "full";
}

ExperimentConfig parse_config(const std::string& text) {
  static const std::set<std::string> kKeys = {
      "code",      "lambda",     "k",           "r",        "mu",
      "target_p",  "c",          "beta_in",     "rho_star", "buffer_len",
      "operating_fraction",      "slack",       "attack",   "rho",
      "decoder",   "trials",     "indices",     "instances", "seed"};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigInvalid(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigInvalid("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.count(key)) throw ConfigInvalid("unknown config key '" + key + "'");
  }
  ExperimentConfig c;
  try {
    if (j.contains("code")) {
      std::string code = j["code"].get<std::string>();
      if (code == "hamming") {
        c.code = CodeKind::kHamming;
      } else if (code == "insdel") {
        c.code = CodeKind::kInsDel;
      } else {
        throw ConfigInvalid("code must be 'hamming' or 'insdel'");
      }
    }
    if (j.contains("lambda")) c.lambda = size_field(j, "lambda");
    c.r = j.contains("r") ? size_field(j, "r") : c.lambda;
    if (j.contains("k")) c.k = size_field(j, "k");
    if (j.contains("mu") && !j["mu"].is_null()) c.mu = size_field(j, "mu");
    if (j.contains("target_p")) {
      c.target_p = j.at("target_p").is_string()
                       ? to_double(rational_field(j, "target_p"))
                       : j.at("target_p").get<double>();
    }
    if (j.contains("c")) c.c = rational_field(j, "c");
    if (j.contains("beta_in")) c.beta_in = rational_field(j, "beta_in");
    if (j.contains("rho_star")) c.rho_star = rational_field(j, "rho_star");
    if (j.contains("buffer_len")) {
      if (j["buffer_len"].is_null()) {
        c.buffer_len.reset();
      } else {
        c.buffer_len = size_field(j, "buffer_len");
      }
    }
    if (j.contains("operating_fraction")) {
      c.operating_fraction = rational_field(j, "operating_fraction");
    }
    if (j.contains("slack")) c.slack = j["slack"].get<double>();
    if (j.contains("attack")) c.attack = j["attack"].get<std::string>();
    if (j.contains("rho") && !j["rho"].is_null() &&
        !(j["rho"].is_string() && j["rho"] == "auto")) {
      c.rho = rational_field(j, "rho");
    }
    if (j.contains("decoder")) {
      std::string d = j["decoder"].get<std::string>();
      if (d == "full") {
        c.decoder = DecoderKind::kFull;
      } else if (d == "strawman") {
        c.decoder = DecoderKind::kStrawman;
      } else if (d == "positional") {
        c.decoder = DecoderKind::kPositional;
      } else {
        throw ConfigInvalid("decoder must be full, strawman or positional");
      }
    }
    if (j.contains("trials")) c.trials = size_field(j, "trials");
    if (j.contains("indices")) {
      const json& v = j["indices"];
      if (v.is_string() && v == "default") {
        c.selection = IndexSelection::kDefault;
      } else if (v.is_string() && v == "all") {
        c.selection = IndexSelection::kAll;
      } else if (v.is_array()) {
        c.selection = IndexSelection::kList;
        c.indices = v.get<std::vector<std::size_t>>();
      } else {
        throw ConfigInvalid("indices must be \"default\", \"all\" or a list");
      }
    }
    if (j.contains("instances")) c.instances = size_field(j, "instances");
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ConfigInvalid(std::string("bad config value: ") + e.what());
  } catch (const InvalidParam& e) {
    throw ConfigInvalid(e.what());
  }
  validate(c);
  return c;
}

std::string config_to_json(const ExperimentConfig& c) {
  json j = {{"code", to_string(c.code)},
            {"lambda", c.lambda},
            {"k", c.k},
            {"r", c.r},
            {"target_p", c.target_p},
            {"c", to_string(c.c)},
            {"beta_in", to_string(c.beta_in)},
            {"rho_star", to_string(c.rho_star)},
            {"operating_fraction", to_string(c.operating_fraction)},
            {"slack", c.slack},
            {"attack", c.attack},
            {"decoder", to_string(c.decoder)},
            {"trials", c.trials},
            {"instances", c.instances},
            {"seed", c.seed}};
  j["mu"] = c.mu ? json(*c.mu) : json(nullptr);
  j["buffer_len"] = c.buffer_len ? json(*c.buffer_len) : json(nullptr);
  j["rho"] = c.rho ? json(to_string(*c.rho)) : json("auto");
  switch (c.selection) {
    case IndexSelection::kDefault:
      j["indices"] = "default";
      break;
    case IndexSelection::kAll:
      j["indices"] = "all";
      break;
    case IndexSelection::kList:
      j["indices"] = c.indices;
      break;
  }
  return j.dump(2);
}

Experiment::Experiment(ExperimentConfig config) : config_(std::move(config)) {
  validate(config_);
  try {
    scheme_ = make_signature_scheme("schnorr", config_.lambda);
  } catch (const UnsupportedLambda& e) {
    throw ConfigInvalid(e.what());
  }
  recorder_ = std::make_unique<RecordingScheme>(*scheme_);
  if (config_.code == CodeKind::kHamming) {
    HammingParams p =
        config_.mu ? hamming_params_with_mu(config_.lambda, config_.k,
                                            config_.r, config_.lambda,
                                            config_.c, *config_.mu,
                                            config_.beta_in)
                   : compute_hamming_params(config_.lambda, config_.k,
                                            config_.r, config_.lambda,
                                            config_.c, config_.target_p,
                                            config_.beta_in);
    hamming_ = std::make_unique<HammingCode>(std::move(p), *recorder_);
  } else {
    InsDelOptions options;
    options.buffer_len = config_.buffer_len;
    options.operating_fraction = config_.operating_fraction;
    options.mu = config_.mu;
    options.slack = config_.slack;
    InsDelParams p = make_insdel_params(config_.lambda, config_.k, config_.r,
                                        config_.rho_star, config_.target_p,
                                        options);
    insdel_ = std::make_unique<InsDelCode>(std::move(p), *recorder_);
  }
}

Experiment::~Experiment() = default;

std::size_t Experiment::k() const { return config_.k; }
std::size_t Experiment::r() const { return config_.r; }

std::size_t Experiment::d() const {
  return hamming_ ? hamming_->params().d : insdel_->params().d;
}

std::size_t Experiment::codeword_len() const {
  return hamming_ ? hamming_->params().K : insdel_->params().K;
}

std::size_t Experiment::block_len() const {
  return hamming_ ? hamming_->params().bl : insdel_->params().block_len;
}

std::size_t Experiment::mu() const {
  return hamming_ ? hamming_->params().mu : insdel_->params().mu;
}

Rational Experiment::budget() const {
  if (config_.rho) return *config_.rho;
  if (config_.attack == "none") return Rational(0);
  if (config_.attack == "rotation") {
    return Rational(BigInt(block_len()), BigInt(codeword_len()));
  }
  return hamming_ ? hamming_->params().rho : insdel_->params().rho;
}

double Experiment::threshold_p() const {
  return hamming_ ? hamming_->params().p : insdel_->params().p_bound;
}

Rational Experiment::delta() const {
  return hamming_ ? hamming_->params().delta : insdel_->params().delta;
}

Instance Experiment::encode_only(std::size_t number) const {
  Instance out;
  out.number = number;
  std::mt19937_64 message_rng(derive_seed(config_.seed, {number, kMessageTag}));
  out.x = random_bits(config_.k, message_rng);
  std::mt19937_64 key_rng(derive_seed(config_.seed, {number, kKeyTag}));
  if (hamming_) {
    HammingEncoding e = hamming_->encode(out.x, key_rng);
    out.pk = std::move(e.pk);
    out.codeword = std::move(e.codeword);
    out.payloads = std::move(e.payloads);
    out.blocks = std::move(e.blocks);
  } else {
    InsDelEncoding e = insdel_->encode(out.x, key_rng);
    out.pk = std::move(e.pk);
    out.codeword = std::move(e.codeword);
    out.payloads = std::move(e.payloads);
    out.blocks = std::move(e.blocks);
  }
  return out;
}

AttackResult Experiment::corrupt(const Instance& clean,
                                 std::size_t number) const {
  HammingEncoding debug;
  AttackContext ctx;
  ctx.codeword = &clean.codeword;
  ctx.rho = budget();
  ctx.seed = derive_seed(config_.seed, {number, kAttackTag});
  if (hamming_) {
    debug.codeword = clean.codeword;
    debug.pk = clean.pk;
    debug.payloads = clean.payloads;
    debug.blocks = clean.blocks;
    ctx.hamming = hamming_.get();
    ctx.hamming_debug = &debug;
  } else {
    ctx.insdel = insdel_.get();
  }
  return run_attack(config_.attack, ctx);
}

Instance Experiment::make_instance(std::size_t number) const {
  Instance out = encode_only(number);
  out.attack = corrupt(out, number);
  return out;
}

DecodeOutcome Experiment::decode(ReceivedWordOracle& oracle, std::size_t i,
                                 std::uint64_t seed) const {
  switch (config_.decoder) {
    case DecoderKind::kStrawman:
      return hamming_->decode_strawman(oracle, i, seed);
    case DecoderKind::kPositional:
      return insdel_->decode_positional(oracle, i, seed);
    case DecoderKind::kFull:
      break;
  }
  return hamming_ ? hamming_->decode(oracle, i, seed)
                  : insdel_->decode(oracle, i, seed);
}

std::uint64_t Experiment::trial_seed(std::size_t instance, std::size_t block,
                                     std::size_t trial) const {
  return derive_seed(config_.seed, {instance, kTrialTag, block, trial});
}

std::vector<std::size_t> Experiment::probe_indices(std::size_t instance,
                                                   bool for_limit) const {
  const std::size_t k = config_.k;
  std::set<std::size_t> out;
  switch (config_.selection) {
    case IndexSelection::kList:
      out.insert(config_.indices.begin(), config_.indices.end());
      break;
    case IndexSelection::kAll:
      for (std::size_t i = 1; i <= k; ++i) out.insert(i);
      break;
    case IndexSelection::kDefault:
      if (for_limit) {
        for (std::size_t i = 1; i <= k; ++i) out.insert(i);
        break;
      }
      {
        std::mt19937_64 rng(derive_seed(config_.seed, {instance, kProbeTag}));
        for (std::size_t j = 0; j * config_.r < k; ++j) {
          std::uniform_int_distribution<std::size_t> in_block(
              j * config_.r + 1, std::min(k, (j + 1) * config_.r));
          out.insert(in_block(rng));
        }
        std::uniform_int_distribution<std::size_t> any(1, k);
        for (int extra = 0; extra < 32; ++extra) out.insert(any(rng));
      }
      break;
  }
  return {out.begin(), out.end()};
}

std::vector<InstanceCounts> run_trials(const Experiment& experiment,
                                       bool for_limit) {
  const ExperimentConfig& cfg = experiment.config();
  const std::size_t r = experiment.r();
  std::vector<InstanceCounts> out;
  for (std::size_t n = 0; n < cfg.instances; ++n) {
    Instance inst = experiment.make_instance(n);
    auto word = std::make_shared<const BitString>(inst.attack.word);

    std::set<std::tuple<BitString, BitString, BitString>> issued;
    for (const auto& p : inst.payloads) {
      issued.emplace(inst.pk,
                     signed_message(p.x_block, p.index,
                                    experiment.hamming()
                                        ? experiment.hamming()->params().index_bits
                                        : experiment.insdel()->params().index_bits),
                     p.sigma);
    }
    experiment.recorder().clear();

    InstanceCounts counts;
    counts.instance = n;
    counts.attack = inst.attack.name;
    counts.distance_raw = inst.attack.distance.raw;
    counts.distance = inst.attack.distance.normalized;
    counts.budget = inst.attack.budget;

    std::map<std::size_t, std::vector<std::size_t>> by_block;
    for (std::size_t i : experiment.probe_indices(n, for_limit)) {
      by_block[(i + r - 1) / r].push_back(i);
    }
    for (const auto& [j, members] : by_block) {
      std::vector<IndexCounts> rows(members.size());
      for (std::size_t m = 0; m < members.size(); ++m) {
        rows[m].index = members[m];
      }
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        ReceivedWordOracle oracle(word);
        DecodeOutcome o =
            experiment.decode(oracle, members.front(), experiment.trial_seed(n, j, t));
        for (std::size_t m = 0; m < members.size(); ++m) {
          const std::size_t i = members[m];
          ++rows[m].trials;
          if (!o.value) {
            ++rows[m].bottom;
          } else if (o.block_bits->bit(i - (j - 1) * r) == inst.x.bit(i)) {
            ++rows[m].correct;
          } else {
            ++rows[m].wrong;
          }
        }
      }
      counts.indices.insert(counts.indices.end(), rows.begin(), rows.end());
    }

    for (const auto& a : experiment.recorder().accepted()) {
      ++counts.accepted;
      if (!issued.count({a.pk, a.message, a.signature})) {
        ++counts.foreign_acceptances;
      }
    }
    experiment.recorder().clear();
    out.push_back(std::move(counts));
  }
  return out;
}

FoolReport estimate_fool(const ExperimentConfig& config) {
  Experiment experiment(config);
  FoolReport report;
  report.threshold = experiment.threshold_p();
  report.instances = run_trials(experiment, false);
  std::size_t min_ok = 0;
  std::size_t min_trials = 0;
  bool first = true;
  for (const InstanceCounts& c : report.instances) {
    report.foreign_acceptances += c.foreign_acceptances;
    for (const IndexCounts& ic : c.indices) {
      report.wrong_bits += ic.wrong;
      const std::size_t ok = ic.correct + ic.bottom;
      const double rate =
          static_cast<double>(ok) / static_cast<double>(ic.trials);
      if (first || rate < report.min_rate) {
        first = false;
        report.min_rate = rate;
        report.min_instance = c.instance;
        report.min_index = ic.index;
        min_ok = ok;
        min_trials = ic.trials;
      }
    }
  }
  report.margin = report.min_rate - wilson_interval(min_ok, min_trials).low;
  report.fooled = report.min_rate < report.threshold - report.margin;
  return report;
}

LimitReport estimate_limit(const ExperimentConfig& config) {
  Experiment experiment(config);
  LimitReport report;
  report.delta = experiment.delta();
  report.k = experiment.k();
  report.counts = run_trials(experiment, true);
  bool first = true;
  for (const InstanceCounts& c : report.counts) {
    LimitInstance li;
    li.instance = c.instance;
    li.good_per_block.assign(experiment.d(), 0);
    for (const IndexCounts& ic : c.indices) {
      ++li.probed;
      li.wrong_bits += ic.wrong;
      // Good means an estimated success probability above 2/3.
      if (3 * ic.correct > 2 * ic.trials) {
        ++li.good;
        ++li.good_per_block[(ic.index - 1) / experiment.r()];
      }
    }
    if (first || li.good < report.min_good) report.min_good = li.good;
    first = false;
    if (Rational(BigInt(li.good)) < report.delta * Rational(BigInt(li.probed))) {
      ++report.limited_instances;
    }
    report.instances.push_back(std::move(li));
  }
  report.limited = report.limited_instances > 0;
  return report;
}

LocalityReport audit_locality(const ExperimentConfig& config) {
  Experiment experiment(config);
  LocalityReport report;
  double total = 0;
  for (std::size_t n = 0; n < config.instances; ++n) {
    Instance inst = experiment.make_instance(n);
    auto word = std::make_shared<const BitString>(inst.attack.word);
    const double bound =
        experiment.hamming()
            ? static_cast<double>(experiment.hamming()->params().locality_bound)
            : experiment.insdel()->decode_query_bound(word->size());
    report.bound = std::max(report.bound, bound);
    for (std::size_t i : experiment.probe_indices(n, false)) {
      for (std::size_t t = 0; t < config.trials; ++t) {
        ReceivedWordOracle oracle(word);
        std::uint64_t seed = derive_seed(config.seed, {n, kAuditTag, i, t});
        experiment.decode(oracle, i, seed);
        const std::size_t q = oracle.query_count();
        if (report.runs == 0 || q < report.min_queries) report.min_queries = q;
        report.max_queries = std::max(report.max_queries, q);
        total += static_cast<double>(q);
        ++report.runs;
        if (static_cast<double>(q) > bound) ++report.violations;
      }
    }
    if (const InsDelCode* code = experiment.insdel()) {
      const double sbound = code->search_query_bound(word->size());
      report.search_bound = std::max(report.search_bound, sbound);
      for (std::size_t j = 1; j <= code->params().d; ++j) {
        for (std::size_t t = 0; t < std::min<std::size_t>(config.trials, 16); ++t) {
          ReceivedWordOracle oracle(word);
          code->nbs(oracle, j, derive_seed(config.seed, {n, kAuditTag, 0, j, t}));
          const std::size_t q = oracle.query_count();
          report.search_max_queries = std::max(report.search_max_queries, q);
          ++report.search_runs;
          if (static_cast<double>(q) > sbound) ++report.search_violations;
        }
      }
    }
  }
  report.mean_queries = report.runs ? total / static_cast<double>(report.runs) : 0;
  return report;
}

std::vector<WorksheetLine> param_worksheet(const ExperimentConfig& config) {
  Experiment experiment(config);
  std::vector<WorksheetLine> w;
  auto add = [&](std::string name, std::string formula, std::string value) {
    w.push_back({std::move(name), std::move(formula), std::move(value)});
  };
  auto num = [](auto v) { return std::to_string(v); };
  auto dbl = [](double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
  };
  add("lambda", "security parameter", num(config.lambda));
  add("k", "message bits", num(config.k));
  add("r", "signature bits = block bits", num(config.r));
  if (const HammingCode* code = experiment.hamming()) {
    const HammingParams& P = code->params();
    add("pk_len", "public key bits", num(P.pk_len));
    add("d", "ceil(k / r)", num(P.d));
    if (config.r > config.k) {
      add("note", "r > k",
          "message padded to a single block; K = bl is Theta(r)");
    }
    add("index_bits", "max(1, ceil(log2 d))", num(P.index_bits));
    add("payload_len", "2 r + pk_len + index_bits", num(P.payload_len));
    add("beta_in", "inner rate", to_string(P.beta_in));
    add("bl", "payload_len / beta_in", num(P.bl));
    add("K", "d * bl", num(P.K));
    add("inner_radius", "min over chunks of floor((n - a) / 2) symbols",
        num(P.inner_radius));
    add("rho_in", "inner_radius / bl", to_string(P.rho_in));
    add("c", "fraction of blocks the adversary may destroy", to_string(P.c));
    add("rho", "c * rho_in", to_string(P.rho));
    add("destroyable_blocks", "floor(rho K / (inner_radius + 1))",
        num(floor_size(P.rho * Rational(BigInt(P.K))) / (P.inner_radius + 1)));
    add("mu", "smallest mu with p >= target", num(P.mu));
    add("p", "1 - exp(-mu (1/2 - c)^2 / (2 (1 - c)))", dbl(P.p));
    add("delta", "1/2", to_string(P.delta));
    add("locality", "(mu + 1) * bl", num(P.locality_bound));
  } else {
    const InsDelParams& P = experiment.insdel()->params();
    add("pk_len", "= r", num(P.pk_len));
    add("d", "ceil(k / r)", num(P.d));
    add("index_bits", "max(1, ceil(log2 k))", num(P.index_bits));
    add("tau", "3 r + index_bits", num(P.tau));
    add("gamma", "1/12", to_string(P.gamma));
    add("rho_sz", "inner edit capacity / (2 core_len)", to_string(P.rho_sz));
    add("beta_sz", "tau / core_len", to_string(P.beta_sz));
    add("alpha_floor", "2 gamma rho_sz / (gamma + 6) = (2/73) rho_sz",
        to_string(P.alpha_floor));
    add("buffer_len", "max(ceil(alpha_floor tau), override)", num(P.buffer_len));
    add("alpha", "buffer_len / tau", to_string(P.alpha));
    add("beta", "2 alpha + 1 / beta_sz", to_string(P.beta));
    add("beta_identity", "beta - 2 alpha - 1 / beta_sz",
        to_string(P.beta - 2 * P.alpha - 1 / P.beta_sz));
    add("rho", "(gamma alpha / (2 beta)) (1 - beta / (2 (1 - gamma)(beta - alpha gamma)))",
        to_string(P.rho));
    add("rho_decimal", "", dbl(to_double(P.rho)));
    add("delta", "1 - 2 beta rho / (gamma alpha)", to_string(P.delta));
    add("delta_decimal", "", dbl(to_double(P.delta)));
    add("delta_identity", "delta + 2 beta rho / (gamma alpha)",
        to_string(P.delta + 2 * P.beta * P.rho / (P.gamma * P.alpha)));
    add("rho_star", "NBS failure allowance", to_string(P.rho_star));
    add("operating_fraction", "share of rho the pk bound is taken at",
        to_string(P.operating_fraction));
    add("q", "(1 - f 2 beta rho / (gamma alpha)) (beta - alpha gamma)(1 - gamma) / beta",
        dbl(to_double(P.q_lower)));
    add("mu", "smallest mu with 1 - rho_star - exp(-mu (q - 1/2)^2 / (2 q)) >= target",
        num(P.mu));
    add("p", "1 - rho_star - exp(-mu (q - 1/2)^2 / (2 q))", dbl(P.p_bound));
    add("core_len", "tau / beta_sz", num(P.core_len));
    add("block_len", "2 buffer_len + core_len", num(P.block_len));
    add("K", "d * block_len", num(P.K));
    add("window", "2 ceil(log2 tau)", num(P.window));
    add("interval_bounds", "[(beta - alpha gamma) tau, (beta + alpha gamma) tau]",
        "[" + to_string((P.beta - P.alpha * P.gamma) * Rational(BigInt(P.tau))) +
            ", " +
            to_string((P.beta + P.alpha * P.gamma) * Rational(BigInt(P.tau))) +
            "]");
  }
  return w;
}

BlockMapReport blockmap(const ExperimentConfig& config) {
  if (config.code != CodeKind::kInsDel) {
    throw ConfigInvalid("blockmap needs an InsDel config");
  }
  Experiment experiment(config);
  const InsDelParams& P = experiment.insdel()->params();
  BlockMapReport report;
  report.gamma = P.gamma;
  report.bad_fraction_bound = 2 * P.beta * P.rho / (P.gamma * P.alpha);
  const Rational tau(BigInt(P.tau));
  report.min_length = floor_size((P.beta - P.alpha * P.gamma) * tau);
  report.max_length = ceil_size((P.beta + P.alpha * P.gamma) * tau);
  for (std::size_t n = 0; n < config.instances; ++n) {
    Instance inst = experiment.make_instance(n);
    BlockMapInstance b;
    b.instance = n;
    b.decomposition =
        optimal_block_decomposition(inst.codeword, inst.attack.word, P.d);
    b.gamma = classify_gamma_good(b.decomposition, P.gamma);
    b.fraction_ok = b.gamma.bad_fraction <= report.bad_fraction_bound;
    for (std::size_t len : b.gamma.interval_lengths) {
      if (len < report.min_length || len > report.max_length) {
        ++b.length_violations;
      }
    }
    report.violations += b.length_violations + (b.fraction_ok ? 0 : 1);
    report.instances.push_back(std::move(b));
  }
  return report;
}

BlockDecAudit audit_block_dec(const Experiment& experiment,
                              const Instance& instance,
                              const BlockDecomposition& decomposition,
                              const Rational& gamma, std::size_t samples,
                              std::uint64_t seed) {
  const InsDelCode* code = experiment.insdel();
  if (code == nullptr) throw ConfigInvalid("BlockDec audit needs InsDel");
  std::vector<std::size_t> good_positions;
  for (std::size_t j = 1; j <= decomposition.d; ++j) {
    if (decomposition.per_block_ed[j - 1] > gamma) continue;
    const auto [first, last] = decomposition.intervals[j - 1];
    for (std::size_t p = first; p <= last; ++p) good_positions.push_back(p);
  }
  BlockDecAudit out;
  if (good_positions.empty()) return out;
  auto word = std::make_shared<const BitString>(instance.attack.word);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, good_positions.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t p = good_positions[pick(rng)];
    const std::size_t j = decomposition.block_of(p);
    ReceivedWordOracle oracle(word);
    auto got = code->block_dec(oracle, p, seed + s);
    ++out.positions;
    if (!got || !(*got == instance.payloads[j - 1])) ++out.failures;
  }
  out.upper = wilson_interval(out.failures, out.positions).high;
  return out;
}

SearchAudit audit_nbs(const Experiment& experiment, const Instance& instance,
                      const GammaGoodReport& gamma, std::size_t samples,
                      std::uint64_t seed) {
  const InsDelCode* code = experiment.insdel();
  if (code == nullptr) throw ConfigInvalid("NBS audit needs InsDel");
  SearchAudit out;
  if (gamma.good_indices.empty()) return out;
  auto word = std::make_shared<const BitString>(instance.attack.word);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gamma.good_indices.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t j = gamma.good_indices[pick(rng)];
    ReceivedWordOracle oracle(word);
    auto got = code->nbs(oracle, j, rng());
    ++out.samples;
    if (!got || !(*got == instance.payloads[j - 1])) ++out.failures;
  }
  out.upper = wilson_interval(out.failures, out.samples).high;
  return out;
}

std::string to_json(const FoolReport& report) {
  json instances = json::array();
  for (const auto& c : report.instances) instances.push_back(counts_json(c));
  json j = {{"threshold_p", report.threshold},
            {"min_rate", report.min_rate},
            {"min_instance", report.min_instance},
            {"min_index", report.min_index},
            {"margin", report.margin},
            {"fooled", report.fooled},
            {"wrong_bits", report.wrong_bits},
            {"foreign_acceptances", report.foreign_acceptances},
            {"instances", instances}};
  return j.dump(2);
}

std::string to_json(const LimitReport& report) {
  json instances = json::array();
  for (const auto& li : report.instances) {
    instances.push_back({{"instance", li.instance},
                         {"probed", li.probed},
                         {"good", li.good},
                         {"good_per_block", li.good_per_block},
                         {"wrong_bits", li.wrong_bits}});
  }
  json counts = json::array();
  for (const auto& c : report.counts) counts.push_back(counts_json(c));
  json j = {{"delta", to_string(report.delta)},
            {"delta_decimal", to_double(report.delta)},
            {"k", report.k},
            {"required_good", to_double(report.delta * Rational(BigInt(report.k)))},
            {"min_good", report.min_good},
            {"limited_instances", report.limited_instances},
            {"limited", report.limited},
            {"instances", instances},
            {"counts", counts}};
  return j.dump(2);
}

std::string to_json(const LocalityReport& report) {
  json j = {{"runs", report.runs},
            {"min_queries", report.min_queries},
            {"max_queries", report.max_queries},
            {"mean_queries", report.mean_queries},
            {"bound", report.bound},
            {"violations", report.violations},
            {"search_runs", report.search_runs},
            {"search_max_queries", report.search_max_queries},
            {"search_bound", report.search_bound},
            {"search_violations", report.search_violations},
            {"ok", report.ok()}};
  return j.dump(2);
}

std::string to_json(const std::vector<WorksheetLine>& worksheet) {
  json rows = json::array();
  for (const auto& line : worksheet) {
    rows.push_back(
        {{"name", line.name}, {"formula", line.formula}, {"value", line.value}});
  }
  return rows.dump(2);
}

std::string to_json(const BlockMapReport& report) {
  json instances = json::array();
  for (const auto& b : report.instances) {
    json blocks = json::array();
    for (std::size_t j = 1; j <= b.decomposition.d; ++j) {
      const auto [first, last] = b.decomposition.intervals[j - 1];
      blocks.push_back({{"block", j},
                        {"first", first},
                        {"last", last},
                        {"raw_ed", b.decomposition.per_block_raw[j - 1]},
                        {"ed", to_string(b.decomposition.per_block_ed[j - 1])}});
    }
    instances.push_back({{"instance", b.instance},
                         {"total_raw", b.decomposition.total_raw},
                         {"good", b.gamma.good_indices},
                         {"bad_fraction", to_string(b.gamma.bad_fraction)},
                         {"fraction_ok", b.fraction_ok},
                         {"length_violations", b.length_violations},
                         {"blocks", blocks}});
  }
  json j = {{"gamma", to_string(report.gamma)},
            {"bad_fraction_bound", to_string(report.bad_fraction_bound)},
            {"min_length", report.min_length},
            {"max_length", report.max_length},
            {"violations", report.violations},
            {"instances", instances}};
  return j.dump(2);
}

std::string to_csv(const std::vector<InstanceCounts>& counts) {
  std::ostringstream s;
  s << "instance,index,trials,correct,bottom,wrong\n";
  for (const auto& c : counts) {
    for (const auto& ic : c.indices) {
      s << c.instance << ',' << ic.index << ',' << ic.trials << ','
        << ic.correct << ',' << ic.bottom << ',' << ic.wrong << '\n';
    }
  }
  return s.str();
}

}  // namespace crldc
