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
#include <optional>

#include "crldc/rational.hpp"

namespace crldc {

struct InsDelOptions {
  // Buffer length override. Must be at least ceil(alpha_floor * tau); when
  // set, alpha = buffer_len / tau.
  std::optional<std::size_t> buffer_len;
  // Fraction of rho at which the pk-sample success bound q is evaluated.
  // At 1 the bound degenerates to q = 1/2 and no finite mu exists.
  Rational operating_fraction = Rational(1, 2);
  // Supplies mu directly instead of deriving it from target_p.
  std::optional<std::size_t> mu;
  // Scan radius slack for BlockDec.
  double slack = 1.5;
};

struct InsDelParams {
  std::size_t lambda = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t pk_len = 0;
  std::size_t mu = 0;
  Rational gamma;
  Rational rho_sz;
  Rational beta_sz;
  Rational alpha_floor;  // 2 gamma rho_sz / (gamma + 6)
  Rational alpha;
  Rational beta;  // 2 alpha + 1 / beta_sz
  Rational rho_star;
  Rational rho;
  Rational delta;  // 1 - 2 beta rho / (gamma alpha)
  Rational operating_fraction;
  Rational q_lower;
  double target_p = 0;
  double p_bound = 0;  // 1 - rho_star - exp(-mu (q - 1/2)^2 / (2 q))
  std::size_t d = 0;
  std::size_t index_bits = 0;
  std::size_t tau = 0;
  std::size_t buffer_len = 0;
  std::size_t core_len = 0;
  std::size_t block_len = 0;
  std::size_t K = 0;
  std::size_t window = 0;  // 2 ceil(log2 tau)
  double slack = 1.5;
};

// Exact-rational derivation of the InsDel parameters from explicit inner
// code constants. Throws InvalidParam when rho_star is outside (0, 1/3) and
// InfeasibleTarget when no mu reaches target_p.
InsDelParams compute_insdel_params(std::size_t lambda, std::size_t k,
                                   std::size_t r, const Rational& rho_sz,
                                   const Rational& beta_sz,
                                   const Rational& rho_star, double target_p,
                                   const InsDelOptions& options = {});

// Same, reading rho_sz and beta_sz from the shipped inner code at tau.
InsDelParams make_insdel_params(std::size_t lambda, std::size_t k,
                                std::size_t r, const Rational& rho_star,
                                double target_p,
                                const InsDelOptions& options = {});

// The desk-scale buffer length used by the CLI defaults.
inline constexpr std::size_t kDeskBufferLen = 72;

}  // namespace crldc
