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

#include "crldc/reed_solomon.hpp"

#include <algorithm>

#include "crldc/errors.hpp"
#include "crldc/gf256.hpp"

namespace crldc {

namespace {

using Poly = std::vector<std::uint8_t>;  // lowest degree first

std::uint8_t eval(const Poly& p, std::uint8_t x) {
  std::uint8_t acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = gf256::mul(acc, x) ^ p[k];
  return acc;
}

Poly mul_trunc(const Poly& a, const Poly& b, std::size_t limit) {
  Poly out(std::min(limit, a.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) {
      out[i + j] ^= gf256::mul(a[i], b[j]);
    }
  }
  return out;
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Connection polynomial of the shortest LFSR generating s.
Poly berlekamp_massey(const std::vector<std::uint8_t>& s) {
  Poly c{1};
  Poly b{1};
  std::size_t len = 0;
  std::size_t shift = 1;
  std::uint8_t last = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    std::uint8_t delta = s[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) {
      delta ^= gf256::mul(c[i], s[n - i]);
    }
    if (delta == 0) {
      ++shift;
      continue;
    }
    std::uint8_t coef = gf256::div(delta, last);
    Poly prev = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      c[i + shift] ^= gf256::mul(coef, b[i]);
    }
    if (2 * len <= n) {
      len = n + 1 - len;
      b = std::move(prev);
      last = delta;
      shift = 1;
    } else {
      ++shift;
    }
  }
  trim(c);
  return c;
}

}  // namespace

ReedSolomon::ReedSolomon(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (k == 0 || k > n || n > 255) {
    throw InvalidParam("RS(" + std::to_string(n) + ", " + std::to_string(k) +
                       ") is not a valid GF(256) code");
  }
  // g(x) = prod_{j=1}^{n-k} (x - alpha^j), stored highest degree first.
  generator_ = {1};
  for (std::size_t j = 1; j <= n - k; ++j) {
    std::uint8_t root = gf256::alpha_pow(static_cast<long>(j));
    std::vector<std::uint8_t> next(generator_.size() + 1, 0);
    for (std::size_t i = 0; i < generator_.size(); ++i) {
      next[i] ^= generator_[i];
      next[i + 1] ^= gf256::mul(generator_[i], root);
    }
    generator_ = std::move(next);
  }
}

std::vector<std::uint8_t> ReedSolomon::encode(
    std::span<const std::uint8_t> message) const {
  if (message.size() != k_) {
    throw LengthMismatch("RS message of " + std::to_string(message.size()) +
                         " symbols, expected " + std::to_string(k_));
  }
  const std::size_t p = n_ - k_;
  std::vector<std::uint8_t> out(message.begin(), message.end());
  out.resize(n_, 0);
  // Long division of message * x^p by g, in place on the parity tail.
  std::vector<std::uint8_t> rem(p, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    std::uint8_t factor = message[i] ^ (p ? rem[0] : 0);
    if (p) {
      std::rotate(rem.begin(), rem.begin() + 1, rem.end());
      rem[p - 1] = 0;
      if (factor) {
        for (std::size_t j = 0; j < p; ++j) {
          rem[j] ^= gf256::mul(generator_[j + 1], factor);
        }
      }
    }
  }
  std::copy(rem.begin(), rem.end(), out.begin() + static_cast<long>(k_));
  return out;
}

std::vector<std::uint8_t> ReedSolomon::syndromes(
    std::span<const std::uint8_t> word) const {
  // Symbol at vector index v is the coefficient of x^(n-1-v).
  std::vector<std::uint8_t> s(n_ - k_, 0);
  const auto& product = gf256::tables().product;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto& times_x = product[gf256::alpha_pow(static_cast<long>(j + 1))];
    std::uint8_t acc = 0;
    for (std::uint8_t c : word) acc = times_x[acc] ^ c;
    s[j] = acc;
  }
  return s;
}

std::optional<ReedSolomon::Decoded> ReedSolomon::decode(
    std::span<const std::uint8_t> received,
    std::span<const std::size_t> erasures) const {
  if (received.size() != n_) {
    throw LengthMismatch("RS received word of " +
                         std::to_string(received.size()) + " symbols");
  }
  const std::size_t p = n_ - k_;
  std::vector<std::size_t> erased(erasures.begin(), erasures.end());
  std::sort(erased.begin(), erased.end());
  erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
  for (std::size_t v : erased) {
    if (v >= n_) throw OutOfRange("erasure position " + std::to_string(v));
  }
  if (erased.size() > p) return std::nullopt;

  std::vector<std::uint8_t> word(received.begin(), received.end());
  Decoded out;
  auto s = syndromes(word);
  if (std::all_of(s.begin(), s.end(), [](std::uint8_t x) { return x == 0; })) {
    out.message.assign(word.begin(), word.begin() + static_cast<long>(k_));
    return out;
  }

  auto locator_of = [&](std::size_t v) {
    return gf256::alpha_pow(static_cast<long>(n_ - 1 - v));
  };

  Poly gamma{1};
  for (std::size_t v : erased) {
    gamma = mul_trunc(gamma, Poly{1, locator_of(v)}, gamma.size() + 1);
  }
  Poly forney = mul_trunc(gamma, Poly(s.begin(), s.end()), p);
  forney.resize(p, 0);
  std::vector<std::uint8_t> seq(forney.begin() + static_cast<long>(erased.size()),
                                forney.end());
  Poly lambda = berlekamp_massey(seq);
  const std::size_t errors = lambda.size() - 1;
  if (2 * errors + erased.size() > p) return std::nullopt;

  Poly psi = mul_trunc(lambda, gamma, lambda.size() + gamma.size() - 1);
  trim(psi);
  const std::size_t degree = psi.size() - 1;
  Poly omega = mul_trunc(Poly(s.begin(), s.end()), psi, p);

  Poly dpsi(psi.size() > 1 ? psi.size() - 1 : 1, 0);
  for (std::size_t k = 1; k < psi.size(); k += 2) dpsi[k - 1] = psi[k];

  std::size_t roots = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    std::uint8_t xinv = gf256::inv(locator_of(v));
    if (eval(psi, xinv) != 0) continue;
    ++roots;
    std::uint8_t den = eval(dpsi, xinv);
    if (den == 0) return std::nullopt;
    std::uint8_t magnitude = gf256::div(eval(omega, xinv), den);
    if (magnitude != 0) {
      word[v] ^= magnitude;
      ++out.corrected;
    }
  }
  if (roots != degree) return std::nullopt;
  s = syndromes(word);
  if (!std::all_of(s.begin(), s.end(), [](std::uint8_t x) { return x == 0; })) {
    return std::nullopt;
  }
  out.message.assign(word.begin(), word.begin() + static_cast<long>(k_));
  return out;
}

}  // namespace crldc
