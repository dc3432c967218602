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


// crldc: encode, corrupt and decode words, and run the Fool / Limit /
// locality experiments from a JSON config.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "crldc/codeword_io.hpp"
#include "crldc/errors.hpp"
#include "crldc/harness.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Common {
  std::string config_path;
  std::optional<std::string> code;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> attack;
  std::optional<std::string> rho;
  std::optional<std::string> decoder;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> instances;
  std::string out;
  std::string csv;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "JSON experiment config");
  cmd->add_option("--code", c.code, "hamming or insdel")
      ->check(CLI::IsMember({"hamming", "insdel"}));
  cmd->add_option("--seed", c.seed, "master seed (overrides the config)");
  cmd->add_option("--attack", c.attack, "attack name");
  cmd->add_option("--rho", c.rho, "attack budget, e.g. 1/100 or auto");
  cmd->add_option("--decoder", c.decoder, "full, strawman or positional");
  cmd->add_option("--trials", c.trials, "trials per index");
  cmd->add_option("--instances", c.instances, "attack instances");
}

// default_code applies when neither the flag nor the config file names one.
crldc::ExperimentConfig load(const Common& c,
                             const char* default_code = nullptr) {
  json j = json::object();
  if (!c.config_path.empty()) {
    std::ifstream in(c.config_path);
    if (!in) throw crldc::IoError("cannot open config " + c.config_path);
    std::stringstream text;
    text << in.rdbuf();
    try {
      j = json::parse(text.str());
    } catch (const json::exception& e) {
      throw crldc::ConfigInvalid(std::string("config is not JSON: ") + e.what());
    }
  }
  if (c.code) j["code"] = *c.code;
  if (default_code != nullptr && !j.contains("code")) j["code"] = default_code;
  if (c.seed) j["seed"] = *c.seed;
  if (c.attack) j["attack"] = *c.attack;
  if (c.rho) j["rho"] = *c.rho;
  if (c.decoder) j["decoder"] = *c.decoder;
  if (c.trials) j["trials"] = *c.trials;
  if (c.instances) j["instances"] = *c.instances;
  return crldc::parse_config(j.dump());
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw crldc::IoError("cannot write " + path);
  out << text << '\n';
}

std::string hex(const crldc::BitString& bits) {
  static const char* kDigits = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : bits.to_bytes()) {
    s += kDigits[b >> 4];
    s += kDigits[b & 15];
  }
  return s;
}

// Public parameters only: the secret key never leaves the encoder.
json sidecar(const crldc::Experiment& e, const crldc::Instance& inst) {
  json blocks = json::array();
  for (const auto& [first, last] : inst.blocks) blocks.push_back({first, last});
  return {{"config", json::parse(crldc::config_to_json(e.config()))},
          {"length", inst.codeword.size()},
          {"d", e.d()},
          {"block_len", e.block_len()},
          {"mu", e.mu()},
          {"pk", hex(inst.pk)},
          {"blocks", blocks}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computationally relaxed locally decodable codes"};
  app.require_subcommand(1);

  Common enc_opts;
  std::string enc_message_out;
  auto* enc = app.add_subcommand("encode", "encode a random message");
  add_common(enc, enc_opts);
  enc->add_option("--out", enc_opts.out, "codeword file")->required();
  enc->add_option("--message-out", enc_message_out, "write the message here");

  Common cor_opts;
  std::string cor_in;
  auto* cor = app.add_subcommand("corrupt", "apply an attack to a codeword");
  add_common(cor, cor_opts);
  cor->add_option("--in", cor_in, "codeword file")->required();
  cor->add_option("--out", cor_opts.out, "corrupted word file")->required();

  Common dec_opts;
  std::string dec_in;
  std::size_t dec_index = 1;
  std::uint64_t dec_seed = 0;
  auto* dec = app.add_subcommand("decode", "decode one message bit");
  add_common(dec, dec_opts);
  dec->add_option("--in", dec_in, "received word file")->required();
  dec->add_option("--index", dec_index, "message index, 1-based")->required();
  dec->add_option("--decode-seed", dec_seed, "decoder seed");

  Common fool_opts, limit_opts, loc_opts, ws_opts, bm_opts;
  auto* fool = app.add_subcommand("fool", "estimate the Fool predicate");
  auto* limit = app.add_subcommand("limit", "estimate the Limit predicate");
  auto* loc = app.add_subcommand("audit-locality", "check query counts");
  auto* ws = app.add_subcommand("worksheet", "print the parameter derivation");
  auto* bm = app.add_subcommand("blockmap", "optimal block decomposition");
  for (auto [cmd, opts] : {std::pair{fool, &fool_opts}, {limit, &limit_opts},
                           {loc, &loc_opts}, {ws, &ws_opts}, {bm, &bm_opts}}) {
    add_common(cmd, *opts);
    cmd->add_option("--out", opts->out, "report file (stdout if unset)");
  }
  fool->add_option("--csv", fool_opts.csv, "flat per-index table");
  limit->add_option("--csv", limit_opts.csv, "flat per-index table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enc) {
      crldc::Experiment e(load(enc_opts));
      crldc::Instance inst = e.encode_only(0);
      crldc::write_codeword(enc_opts.out, inst.codeword);
      if (!enc_message_out.empty()) {
        crldc::write_codeword(enc_message_out, inst.x);
      }
      emit(sidecar(e, inst).dump(2), enc_opts.out + ".json");
      std::cout << "wrote " << inst.codeword.size() << " bits to "
                << enc_opts.out << '\n';
      return 0;
    }
    if (*cor) {
      crldc::Experiment e(load(cor_opts));
      crldc::Instance inst;
      inst.codeword = crldc::read_codeword(cor_in);
      for (std::size_t j = 0; j < e.d(); ++j) {
        inst.blocks.emplace_back(j * e.block_len() + 1, (j + 1) * e.block_len());
      }
      crldc::AttackResult a = e.corrupt(inst, 0);
      crldc::write_codeword(cor_opts.out, a.word);
      json meta = {{"attack", a.name},
                   {"metric", crldc::to_string(a.metric)},
                   {"budget", crldc::to_string(a.budget)},
                   {"distance_raw", a.distance.raw},
                   {"distance", crldc::to_string(a.distance.normalized)},
                   {"length", a.word.size()}};
      emit(meta.dump(2), cor_opts.out + ".json");
      std::cout << meta.dump(2) << '\n';
      return 0;
    }
    if (*dec) {
      crldc::Experiment e(load(dec_opts));
      crldc::ReceivedWordOracle oracle(crldc::read_codeword(dec_in));
      crldc::DecodeOutcome o = e.decode(oracle, dec_index, dec_seed);
      json out = {{"index", dec_index},
                  {"seed", dec_seed},
                  {"queries", o.queries_used},
                  {"detail", o.detail}};
      out["value"] = o.value ? json(*o.value ? 1 : 0) : json("bottom");
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (*fool) {
      crldc::FoolReport r = crldc::estimate_fool(load(fool_opts));
      emit(crldc::to_json(r), fool_opts.out);
      if (!fool_opts.csv.empty()) emit(crldc::to_csv(r.instances), fool_opts.csv);
      return r.fooled || r.wrong_bits > 0 ? 1 : 0;
    }
    if (*limit) {
      crldc::LimitReport r = crldc::estimate_limit(load(limit_opts));
      emit(crldc::to_json(r), limit_opts.out);
      if (!limit_opts.csv.empty()) emit(crldc::to_csv(r.counts), limit_opts.csv);
      return r.limited ? 1 : 0;
    }
    if (*loc) {
      crldc::LocalityReport r = crldc::audit_locality(load(loc_opts));
      emit(crldc::to_json(r), loc_opts.out);
      return r.ok() ? 0 : 1;
    }
    if (*ws) {
      auto lines = crldc::param_worksheet(load(ws_opts));
      if (ws_opts.out.empty()) {
        for (const auto& l : lines) {
          std::printf("%-20s %-60s %s\n", l.name.c_str(), l.formula.c_str(),
                      l.value.c_str());
        }
      } else {
        emit(crldc::to_json(lines), ws_opts.out);
      }
      return 0;
    }
    if (*bm) {
      crldc::BlockMapReport r = crldc::blockmap(load(bm_opts, "insdel"));
      emit(crldc::to_json(r), bm_opts.out);
      return r.violations == 0 ? 0 : 1;
    }
  } catch (const crldc::Error& e) {
    std::cerr << "crldc: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
