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

#include "crldc/insdel_params.hpp"

#include <cmath>

#include "crldc/errors.hpp"
#include "crldc/inner_insdel.hpp"

namespace crldc {

namespace {

double pk_bound(const Rational& rho_star, const Rational& q, std::size_t mu) {
  long double qq = q.convert_to<long double>();
  long double gap = qq - 0.5L;
  return static_cast<double>(1.0L - rho_star.convert_to<long double>() -
                             std::exp(-static_cast<long double>(mu) * gap * gap /
                                      (2.0L * qq)));
}

}  // namespace

InsDelParams compute_insdel_params(std::size_t lambda, std::size_t k,
                                   std::size_t r, const Rational& rho_sz,
                                   const Rational& beta_sz,
                                   const Rational& rho_star, double target_p,
                                   const InsDelOptions& options) {
  if (k == 0 || r == 0) throw InvalidParam("k and r must be positive");
  if (rho_star <= 0 || rho_star >= Rational(1, 3)) {
    throw InvalidParam("rho_star must lie in (0, 1/3)");
  }
  if (rho_sz <= 0 || rho_sz >= 1) throw InvalidParam("rho_sz must lie in (0, 1)");
  if (beta_sz <= 0 || beta_sz > 1) throw InvalidParam("beta_sz must lie in (0, 1]");
  if (options.operating_fraction <= 0 || options.operating_fraction > 1) {
    throw InvalidParam("operating_fraction must lie in (0, 1]");
  }

  InsDelParams p;
  p.lambda = lambda;
  p.k = k;
  p.r = r;
  p.pk_len = r;
  p.d = (k + r - 1) / r;
  p.index_bits = index_width(k);
  p.tau = 3 * r + p.index_bits;
  p.window = 2 * ceil_log2(p.tau);
  p.slack = options.slack;
  p.gamma = Rational(1, 12);
  p.rho_sz = rho_sz;
  p.beta_sz = beta_sz;
  p.rho_star = rho_star;
  p.target_p = target_p;
  p.operating_fraction = options.operating_fraction;

  const Rational tau(BigInt(p.tau));
  p.alpha_floor = 2 * p.gamma * rho_sz / (p.gamma + 6);
  if (options.buffer_len) {
    if (Rational(BigInt(*options.buffer_len)) < p.alpha_floor * tau) {
      throw InvalidParam("buffer_len below alpha_floor * tau");
    }
    p.buffer_len = *options.buffer_len;
    p.alpha = Rational(BigInt(p.buffer_len)) / tau;
  } else {
    p.alpha = p.alpha_floor;
    p.buffer_len = ceil_size(p.alpha * tau);
  }
  p.beta = 2 * p.alpha + 1 / beta_sz;
  p.core_len = ceil_size(tau / beta_sz);
  p.block_len = 2 * p.buffer_len + p.core_len;
  p.K = p.d * p.block_len;

  const Rational& g = p.gamma;
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  p.rho = (g * a / (2 * b)) * (1 - b / (2 * (1 - g) * (b - a * g)));
  p.delta = 1 - 2 * b * p.rho / (g * a);
  p.q_lower = (1 - p.operating_fraction * 2 * b * p.rho / (g * a)) *
              (b - a * g) * (1 - g) / b;

  if (options.mu) {
    if (*options.mu == 0) throw InvalidParam("mu must be at least 1");
    p.mu = *options.mu;
  } else {
    if (target_p >= 1.0 || p.q_lower <= Rational(1, 2) ||
        to_double(1 - rho_star) <= target_p) {
      throw InfeasibleTarget("no mu reaches target_p = " +
                             std::to_string(target_p) + " (q = " +
                             to_string(p.q_lower) + ")");
    }
    long double qq = p.q_lower.convert_to<long double>();
    long double slack = 1.0L - rho_star.convert_to<long double>() - target_p;
    long double need = -std::log(slack) * 2.0L * qq / ((qq - 0.5L) * (qq - 0.5L));
    auto mu = static_cast<std::size_t>(std::max(1.0L, std::ceil(need)));
    while (mu > 1 && pk_bound(rho_star, p.q_lower, mu - 1) >= target_p) --mu;
    while (pk_bound(rho_star, p.q_lower, mu) < target_p) ++mu;
    p.mu = mu;
  }
  p.p_bound = pk_bound(rho_star, p.q_lower, p.mu);
  return p;
}

InsDelParams make_insdel_params(std::size_t lambda, std::size_t k,
                                std::size_t r, const Rational& rho_star,
                                double target_p, const InsDelOptions& options) {
  const std::size_t tau = 3 * r + index_width(k);
  InnerInsDelCode inner(tau);
  return compute_insdel_params(lambda, k, r, inner.rho_sz(), inner.beta_sz(),
                               rho_star, target_p, options);
}

}  // namespace crldc
