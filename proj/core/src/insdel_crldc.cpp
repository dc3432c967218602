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

#include "crldc/insdel_crldc.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "crldc/errors.hpp"
#include "crldc/majority.hpp"

namespace crldc {

namespace {

// A maximal union of low-weight windows, with its longest zero run.
// Positions are absolute and 1-indexed.
struct Gap {
  std::size_t first;
  std::size_t last;
  std::size_t run_first;
  std::size_t run_last;
  bool whole;  // both ends lie inside the scanned region
};

struct CoreSpan {
  std::size_t first = 0;
  std::size_t last = 0;
};

}  // namespace

class InsDelCode::Session {
 public:
  Session(const InsDelCode& code, ReceivedWordOracle& oracle)
      : code_(code),
        reader_(oracle),
        n_(oracle.length()),
        bits_(n_ + 1, -1),
        weight_(n_ + 1, -1) {}

  std::optional<SignedBlockPayload> block_dec(std::size_t i) {
    const auto& P = code_.params_;
    const double max_block =
        to_double(P.beta + P.alpha * P.gamma) * static_cast<double>(P.tau);
    const auto reach = static_cast<std::size_t>(
        std::ceil(max_block * (1.0 + P.slack) / 2.0));
    std::size_t half = std::min(reach, P.block_len);
    while (true) {
      std::size_t lo = i > half ? i - half : 1;
      std::size_t hi = std::min(n_, i + half);
      enum class Status { kFound, kExpand, kBottom };
      CoreSpan span;
      Status status = locate(i, lo, hi, span) ? Status::kFound : Status::kExpand;
      if (status == Status::kExpand && lo == 1 && hi == n_) {
        status = Status::kBottom;
      }
      if (status == Status::kFound) return decode_span(span);
      if (status == Status::kBottom || half >= reach) return std::nullopt;
      half = std::min(reach, 2 * half);
    }
  }

  std::optional<SignedBlockPayload> nbs(std::size_t j, std::mt19937_64& rng) {
    const std::size_t logn = std::max<std::size_t>(1, ceil_log2(n_));
    const std::size_t repeats = logn;
    std::vector<std::optional<BitString>> votes;
    std::map<BitString, std::size_t> tally;
    for (std::size_t rep = 0; rep < repeats; ++rep) {
      auto found = search(j, rng, 4 * logn + 8);
      if (found) {
        BitString key = found->serialize(code_.params_.index_bits);
        std::size_t c = ++tally[key];
        votes.emplace_back(std::move(key));
        if (2 * c > repeats) break;
      } else {
        votes.emplace_back(std::nullopt);
      }
    }
    MajorityResult winner = majority(votes);
    if (!winner.value) return std::nullopt;
    SignedBlockPayload payload = code_.parse(*winner.value);
    if (payload.index != j) return std::nullopt;
    return payload;
  }

 private:
  static constexpr std::size_t kRetryCap = 3;

  std::optional<SignedBlockPayload> search(std::size_t j, std::mt19937_64& rng,
                                           std::size_t step_cap) {
    const std::size_t d = code_.params_.d;
    std::size_t lo = 1;
    std::size_t hi = n_;
    for (std::size_t step = 0; step < step_cap && lo <= hi; ++step) {
      const std::size_t width = hi - lo;
      std::uniform_int_distribution<std::size_t> probe(lo + width / 3,
                                                       lo + 2 * width / 3);
      std::optional<SignedBlockPayload> got;
      std::size_t at = 0;
      for (std::size_t attempt = 0; attempt < kRetryCap && !got; ++attempt) {
        at = probe(rng);
        auto r = block_dec(at);
        if (r && r->index >= 1 && r->index <= d) got = std::move(r);
      }
      if (!got) return std::nullopt;
      if (got->index == j) return got;
      if (got->index < j) {
        lo = at + 1;
      } else {
        if (at == 1) return std::nullopt;
        hi = at - 1;
      }
    }
    return std::nullopt;
  }

  // Finds the core that position i belongs to using only bits in [lo, hi].
  // Returns false when the region is too small to decide.
  bool locate(std::size_t i, std::size_t lo, std::size_t hi, CoreSpan& span) {
    const auto& P = code_.params_;
    const std::size_t w = P.window;
    const std::size_t len = hi - lo + 1;

    std::vector<Gap> gaps;
    if (len >= w) {
      bool open = false;
      std::size_t gap_first = 0;
      std::size_t gap_last = 0;
      auto close = [&]() {
        Gap g;
        g.first = gap_first;
        g.last = gap_last;
        bool left_ok = gap_first >= lo + w || lo == 1;
        bool right_ok = gap_last + w <= hi || hi == n_;
        g.whole = left_ok && right_ok;
        std::size_t best_len = 0;
        std::size_t run = 0;
        g.run_first = g.first;
        g.run_last = g.first;
        for (std::size_t p = gap_first; p <= gap_last; ++p) {
          run = bit(p) ? 0 : run + 1;
          if (run > best_len) {
            best_len = run;
            g.run_last = p;
            g.run_first = p + 1 - run;
          }
        }
        if (best_len > 0) gaps.push_back(g);
      };
      for (std::size_t s = lo; s + w <= hi + 1; ++s) {
        if (!low(s)) continue;
        if (open && s <= gap_last + 1) {
          gap_last = s + w - 1;
        } else {
          if (open) close();
          open = true;
          gap_first = s;
          gap_last = s + w - 1;
        }
      }
      if (open) close();
    }

    // Core boundaries adjacent to a gap, or the word ends.
    auto left_end_of = [&](std::ptrdiff_t g, std::size_t& first) {
      if (g < 0) {
        if (lo != 1) return false;
        first = 1;
        return true;
      }
      if (!gaps[g].whole) return false;
      first = gaps[g].run_last + 1;
      return true;
    };
    auto right_end_of = [&](std::ptrdiff_t g, std::size_t& last) {
      if (g >= static_cast<std::ptrdiff_t>(gaps.size())) {
        if (hi != n_) return false;
        last = n_;
        return true;
      }
      if (!gaps[g].whole) return false;
      last = gaps[g].run_first - 1;
      return true;
    };

    std::ptrdiff_t inside = -1;
    std::ptrdiff_t before = -1;
    for (std::size_t g = 0; g < gaps.size(); ++g) {
      if (gaps[g].last < i) before = static_cast<std::ptrdiff_t>(g);
      if (gaps[g].first <= i && i <= gaps[g].last) {
        inside = static_cast<std::ptrdiff_t>(g);
      }
    }
    if (inside >= 0) {
      const Gap& g = gaps[inside];
      if (!g.whole) return false;
      const std::size_t run_len = g.run_last - g.run_first + 1;
      bool go_left = i < g.run_first || 2 * (i - g.run_first) < run_len;
      const bool has_left = g.run_first > 1;
      const bool has_right = g.run_last < n_;
      if (go_left && !has_left) go_left = false;
      if (!go_left && !has_right) go_left = true;
      if (go_left) {
        span.last = g.run_first - 1;
        if (!left_end_of(inside - 1, span.first)) return false;
      } else {
        span.first = g.run_last + 1;
        if (!right_end_of(inside + 1, span.last)) return false;
      }
    } else {
      if (!left_end_of(before, span.first)) return false;
      if (!right_end_of(before + 1, span.last)) return false;
    }
    return true;
  }

  bool bit(std::size_t p) {
    if (bits_[p] < 0) bits_[p] = reader_.bit(p) ? 1 : 0;
    return bits_[p] == 1;
  }

  // Window [s, s + w - 1] is low when its weight is below 2/5 of w.
  bool low(std::size_t s) {
    const std::size_t w = code_.params_.window;
    if (weight_[s] < 0) {
      std::int32_t weight = 0;
      if (s > 1 && weight_[s - 1] >= 0) {
        weight = weight_[s - 1] - bit(s - 1) + bit(s + w - 1);
      } else {
        for (std::size_t p = s; p < s + w; ++p) weight += bit(p);
      }
      weight_[s] = weight;
    }
    return 5 * static_cast<std::size_t>(weight_[s]) < 2 * w;
  }

  std::optional<SignedBlockPayload> decode_span(const CoreSpan& span) {
    if (span.first < 1 || span.last < span.first || span.last > n_) {
      return std::nullopt;
    }
    if (span.last - span.first + 1 > 2 * code_.params_.core_len) {
      return std::nullopt;
    }
    auto key = std::make_pair(span.first, span.last);
    auto it = cores_.find(key);
    if (it != cores_.end()) return it->second;
    auto result = code_.decode_core(reader_.read(span.first, span.last));
    cores_.emplace(key, result);
    return result;
  }

  const InsDelCode& code_;
  CachedReader reader_;
  std::size_t n_;
  std::vector<std::int8_t> bits_;
  std::vector<std::int32_t> weight_;
  std::map<std::pair<std::size_t, std::size_t>,
           std::optional<SignedBlockPayload>>
      cores_;
};

InsDelCode::InsDelCode(InsDelParams params, const SignatureScheme& scheme)
    : params_(std::move(params)), scheme_(scheme), inner_(params_.tau) {
  if (scheme.sig_len() != params_.r || scheme.pk_len() != params_.pk_len) {
    throw ParamMismatch("scheme lengths disagree with InsDel parameters");
  }
  if (inner_.codeword_len() != params_.core_len) {
    throw ParamMismatch("inner code produces " +
                        std::to_string(inner_.codeword_len()) +
                        "-bit cores, parameters declare " +
                        std::to_string(params_.core_len));
  }
}

InsDelCode::~InsDelCode() = default;

InsDelEncoding InsDelCode::encode(const BitString& x,
                                  std::mt19937_64& rng) const {
  const auto& P = params_;
  if (x.size() != P.k) {
    throw ParamMismatch("message of " + std::to_string(x.size()) +
                        " bits, expected " + std::to_string(P.k));
  }
  BitString padded = x;
  padded.append(BitString(P.d * P.r - P.k));
  SignatureKeyPair keys = scheme_.gen(rng);
  const BitString buffer(P.buffer_len);
  InsDelEncoding out;
  out.pk = keys.pk;
  for (std::size_t j = 1; j <= P.d; ++j) {
    SignedBlockPayload payload;
    payload.x_block = padded.slice((j - 1) * P.r + 1, j * P.r);
    payload.sigma =
        scheme_.sign(keys.sk, signed_message(payload.x_block, j, P.index_bits));
    payload.pk = keys.pk;
    payload.index = j;
    std::size_t start = out.codeword.size() + 1;
    out.codeword.append(buffer);
    out.codeword.append(inner_.encode(payload.serialize(P.index_bits)));
    out.codeword.append(buffer);
    out.blocks.emplace_back(start, out.codeword.size());
    out.payloads.push_back(std::move(payload));
  }
  return out;
}

SignedBlockPayload InsDelCode::parse(const BitString& payload_bits) const {
  return SignedBlockPayload::parse(payload_bits, params_.r, params_.r,
                                   params_.pk_len, params_.index_bits);
}

std::optional<SignedBlockPayload> InsDelCode::decode_core(
    const BitString& core) const {
  auto bits = inner_.decode(core);
  if (!bits) return std::nullopt;
  return parse(*bits);
}

std::optional<SignedBlockPayload> InsDelCode::block_dec(
    ReceivedWordOracle& oracle, std::size_t i, std::uint64_t) const {
  if (i < 1 || i > oracle.length()) {
    throw OutOfRange("position " + std::to_string(i) + " outside [1, " +
                     std::to_string(oracle.length()) + "]");
  }
  Session session(*this, oracle);
  return session.block_dec(i);
}

std::optional<SignedBlockPayload> InsDelCode::nbs(ReceivedWordOracle& oracle,
                                                  std::size_t j,
                                                  std::uint64_t seed) const {
  if (j < 1 || j > params_.d) {
    throw OutOfRange("block " + std::to_string(j) + " outside [1, " +
                     std::to_string(params_.d) + "]");
  }
  if (oracle.length() == 0) return std::nullopt;
  Session session(*this, oracle);
  std::mt19937_64 rng(seed);
  return session.nbs(j, rng);
}

DecodeOutcome InsDelCode::finish(const std::optional<BitString>& pk_star,
                                 bool tie,
                                 const std::optional<SignedBlockPayload>& block,
                                 std::size_t i, std::size_t j) const {
  DecodeOutcome out;
  out.pk_star = pk_star;
  out.pk_tie = tie;
  if (!pk_star) {
    out.detail = "pk-majority";
  } else if (!block) {
    out.detail = "block-search";
  } else if (scheme_.verify(*pk_star,
                            signed_message(block->x_block, j, params_.index_bits),
                            block->sigma)) {
    out.value = block->x_block.bit(i - (j - 1) * params_.r);
    out.block_bits = block->x_block;
  } else {
    out.detail = "verification";
  }
  return out;
}

DecodeOutcome InsDelCode::decode(ReceivedWordOracle& oracle, std::size_t i,
                                 std::uint64_t seed) const {
  if (i < 1 || i > params_.k) {
    throw IndexOutOfRange("index " + std::to_string(i) + " outside [1, " +
                          std::to_string(params_.k) + "]");
  }
  const std::size_t start = oracle.query_count();
  const std::size_t n = oracle.length();
  if (n == 0) {
    DecodeOutcome out;
    out.detail = "empty-word";
    return out;
  }
  Session session(*this, oracle);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(1, n);
  std::vector<std::optional<BitString>> keys;
  keys.reserve(params_.mu);
  for (std::size_t s = 0; s < params_.mu; ++s) {
    auto block = session.block_dec(pick(rng));
    keys.push_back(block ? std::optional<BitString>(block->pk) : std::nullopt);
  }
  MajorityResult pk_star = majority(keys);
  const std::size_t j = (i + params_.r - 1) / params_.r;
  auto block = session.nbs(j, rng);
  DecodeOutcome out = finish(pk_star.value, pk_star.tie, block, i, j);
  out.queries_used = oracle.query_count() - start;
  return out;
}

DecodeOutcome InsDelCode::decode_positional(ReceivedWordOracle& oracle,
                                            std::size_t i,
                                            std::uint64_t seed) const {
  if (i < 1 || i > params_.k) {
    throw IndexOutOfRange("index " + std::to_string(i));
  }
  const auto& P = params_;
  const std::size_t start = oracle.query_count();
  std::map<std::size_t, std::optional<SignedBlockPayload>> decoded;
  auto fetch = [&](std::size_t j) -> const std::optional<SignedBlockPayload>& {
    auto it = decoded.find(j);
    if (it != decoded.end()) return it->second;
    std::size_t first = (j - 1) * P.block_len + P.buffer_len + 1;
    std::size_t last = first + P.core_len - 1;
    std::optional<SignedBlockPayload> result;
    if (last <= oracle.length()) result = decode_core(oracle.read(first, last));
    return decoded.emplace(j, std::move(result)).first->second;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(1, P.d);
  std::vector<std::optional<BitString>> keys;
  for (std::size_t s = 0; s < P.mu; ++s) {
    const auto& block = fetch(pick(rng));
    keys.push_back(block ? std::optional<BitString>(block->pk) : std::nullopt);
  }
  MajorityResult pk_star = majority(keys);
  const std::size_t j = (i + P.r - 1) / P.r;
  DecodeOutcome out = finish(pk_star.value, pk_star.tie, fetch(j), i, j);
  out.queries_used = oracle.query_count() - start;
  return out;
}

double InsDelCode::decode_query_bound(std::size_t received_len) const {
  double logn = std::log2(static_cast<double>(std::max<std::size_t>(2, received_len)));
  double logk = std::log2(static_cast<double>(std::max<std::size_t>(2, params_.k)));
  return kDecodeQueryConstant * (logn * logn * logn + static_cast<double>(params_.mu)) *
         (static_cast<double>(params_.r) + logk);
}

double InsDelCode::search_query_bound(std::size_t received_len) const {
  double logn = std::log2(static_cast<double>(std::max<std::size_t>(2, received_len)));
  double logd = std::log2(static_cast<double>(std::max<std::size_t>(2, params_.d)));
  return kSearchQueryConstant * logn * logn * logn *
         (static_cast<double>(params_.tau) + logd);
}

}  // namespace crldc
