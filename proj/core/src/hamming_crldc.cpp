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

#include "crldc/hamming_crldc.hpp"

#include <cmath>
#include <map>

#include "crldc/errors.hpp"
#include "crldc/majority.hpp"

namespace crldc {

namespace {

long double exponent_rate(const Rational& c) {
  long double cc = c.convert_to<long double>();
  return (0.5L - cc) * (0.5L - cc) / (2.0L * (1.0L - cc));
}

void check_c(const Rational& c) {
  if (c <= 0 || c >= Rational(1, 2)) {
    throw InvalidParam("c must lie in (0, 1/2), got " + to_string(c));
  }
}

}  // namespace

double hamming_success_bound(const Rational& c, std::size_t mu) {
  check_c(c);
  return static_cast<double>(
      1.0L - std::exp(-static_cast<long double>(mu) * exponent_rate(c)));
}

std::size_t hamming_mu_for_target(const Rational& c, double target_p) {
  check_c(c);
  if (target_p >= 1.0) {
    throw InfeasibleTarget("success probability 1 is never reached");
  }
  if (!(target_p > 0.0)) throw InvalidParam("target_p must be positive");
  long double need = -std::log1p(-static_cast<long double>(target_p)) /
                     exponent_rate(c);
  auto mu = static_cast<std::size_t>(std::max(1.0L, std::ceil(need)));
  while (mu > 1 && hamming_success_bound(c, mu - 1) >= target_p) --mu;
  while (hamming_success_bound(c, mu) < target_p) ++mu;
  return mu;
}

HammingParams hamming_params_with_mu(std::size_t lambda, std::size_t k,
                                     std::size_t r, std::size_t pk_len,
                                     const Rational& c, std::size_t mu,
                                     const Rational& beta_in) {
  check_c(c);
  if (k == 0) throw InvalidParam("message length k must be positive");
  if (r == 0) throw InvalidParam("signature length r must be positive");
  if (mu == 0) throw InvalidParam("mu must be at least 1");
  HammingParams p;
  p.lambda = lambda;
  p.k = k;
  p.r = r;
  p.pk_len = pk_len;
  p.c = c;
  p.mu = mu;
  p.d = (k + r - 1) / r;
  p.index_bits = index_width(p.d);
  p.payload_len = 2 * r + pk_len + p.index_bits;
  p.beta_in = beta_in;
  InnerHammingCode inner(p.payload_len, beta_in);
  p.bl = inner.codeword_len();
  p.K = p.d * p.bl;
  p.inner_radius = inner.radius();
  p.rho_in = inner.rho_in();
  p.rho = c * p.rho_in;
  p.p = hamming_success_bound(c, mu);
  p.delta = Rational(1, 2);
  p.locality_bound = (mu + 1) * p.bl;
  return p;
}

HammingParams compute_hamming_params(std::size_t lambda, std::size_t k,
                                     std::size_t r, std::size_t pk_len,
                                     const Rational& c, double target_p,
                                     const Rational& beta_in) {
  return hamming_params_with_mu(lambda, k, r, pk_len, c,
                                hamming_mu_for_target(c, target_p), beta_in);
}

HammingCode::HammingCode(HammingParams params, const SignatureScheme& scheme)
    : params_(std::move(params)),
      scheme_(scheme),
      inner_(params_.payload_len, params_.beta_in) {
  if (scheme.sig_len() != params_.r || scheme.pk_len() != params_.pk_len) {
    throw ParamMismatch("scheme lengths (r=" + std::to_string(scheme.sig_len()) +
                        ", pk=" + std::to_string(scheme.pk_len()) +
                        ") disagree with parameters");
  }
  if (inner_.codeword_len() != params_.bl) {
    throw ParamMismatch("inner code length disagrees with bl");
  }
}

HammingEncoding HammingCode::encode(const BitString& x,
                                    std::mt19937_64& rng) const {
  const auto& P = params_;
  if (x.size() != P.k) {
    throw ParamMismatch("message of " + std::to_string(x.size()) +
                        " bits, expected " + std::to_string(P.k));
  }
  BitString padded = x;
  padded.append(BitString(P.d * P.r - P.k));
  SignatureKeyPair keys = scheme_.gen(rng);
  HammingEncoding out;
  out.pk = keys.pk;
  for (std::size_t j = 1; j <= P.d; ++j) {
    SignedBlockPayload payload;
    payload.x_block = padded.slice((j - 1) * P.r + 1, j * P.r);
    payload.sigma =
        scheme_.sign(keys.sk, signed_message(payload.x_block, j, P.index_bits));
    payload.pk = keys.pk;
    payload.index = j;
    out.codeword.append(encode_payload(payload));
    out.blocks.emplace_back((j - 1) * P.bl + 1, j * P.bl);
    out.payloads.push_back(std::move(payload));
  }
  return out;
}

BitString HammingCode::encode_payload(const SignedBlockPayload& payload) const {
  return inner_.encode(payload.serialize(params_.index_bits));
}

SignedBlockPayload HammingCode::parse(const BitString& payload_bits) const {
  return SignedBlockPayload::parse(payload_bits, params_.r, params_.r,
                                   params_.pk_len, params_.index_bits);
}

SignedBlockPayload HammingCode::read_block(const BitString& word,
                                           std::size_t j) const {
  if (j < 1 || j > params_.d) throw OutOfRange("block index");
  return parse(inner_.decode(word.slice((j - 1) * params_.bl + 1, j * params_.bl)));
}

void HammingCode::check_index(ReceivedWordOracle& oracle, std::size_t i) const {
  if (i < 1 || i > params_.k) {
    throw IndexOutOfRange("index " + std::to_string(i) + " outside [1, " +
                          std::to_string(params_.k) + "]");
  }
  if (oracle.length() != params_.K) {
    throw LengthMismatch("received word of " + std::to_string(oracle.length()) +
                         " bits, expected " + std::to_string(params_.K));
  }
}

DecodeOutcome HammingCode::decode(ReceivedWordOracle& oracle, std::size_t i,
                                  std::uint64_t seed) const {
  check_index(oracle, i);
  const auto& P = params_;
  const std::size_t start = oracle.query_count();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(1, P.d);
  // Every sampled block is read in full; only the inner decoding work is
  // shared between repeated samples of the same block.
  std::map<std::size_t, SignedBlockPayload> decoded;
  auto fetch = [&](std::size_t j) -> const SignedBlockPayload& {
    BitString bits = oracle.read((j - 1) * P.bl + 1, j * P.bl);
    auto it = decoded.find(j);
    if (it == decoded.end()) {
      it = decoded.emplace(j, parse(inner_.decode(bits))).first;
    }
    return it->second;
  };

  std::vector<std::optional<BitString>> keys;
  keys.reserve(P.mu);
  for (std::size_t s = 0; s < P.mu; ++s) keys.emplace_back(fetch(pick(rng)).pk);
  MajorityResult pk_star = majority(keys);

  const std::size_t j = (i + P.r - 1) / P.r;
  const SignedBlockPayload& block = fetch(j);
  DecodeOutcome out;
  out.pk_star = pk_star.value;
  out.pk_tie = pk_star.tie;
  bool ok = scheme_.verify(*pk_star.value,
                           signed_message(block.x_block, j, P.index_bits),
                           block.sigma);
  if (ok) {
    out.value = block.x_block.bit(i - (j - 1) * P.r);
    out.block_bits = block.x_block;
  } else {
    out.detail = "verification";
  }
  out.queries_used = oracle.query_count() - start;
  return out;
}

DecodeOutcome HammingCode::decode_strawman(ReceivedWordOracle& oracle,
                                           std::size_t i,
                                           std::uint64_t) const {
  check_index(oracle, i);
  const auto& P = params_;
  const std::size_t start = oracle.query_count();
  const std::size_t j = (i + P.r - 1) / P.r;
  SignedBlockPayload block =
      parse(inner_.decode(oracle.read((j - 1) * P.bl + 1, j * P.bl)));
  DecodeOutcome out;
  out.pk_star = block.pk;
  if (scheme_.verify(block.pk, signed_message(block.x_block, j, P.index_bits),
                     block.sigma)) {
    out.value = block.x_block.bit(i - (j - 1) * P.r);
    out.block_bits = block.x_block;
  } else {
    out.detail = "verification";
  }
  out.queries_used = oracle.query_count() - start;
  return out;
}

}  // namespace crldc
