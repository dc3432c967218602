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

#include "crldc/rational.hpp"

#include <cctype>

#include "crldc/errors.hpp"

namespace crldc {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw InvalidParam("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) {
      throw InvalidParam("cannot parse rational '" + text + "'");
    }
    BigInt d(den);
    if (d == 0) throw InvalidParam("zero denominator in '" + text + "'");
    return Rational(BigInt(num), d);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!is_int(whole) || (!frac.empty() && !is_int(frac))) {
      throw InvalidParam("cannot parse rational '" + text + "'");
    }
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    BigInt w(whole);
    BigInt f = frac.empty() ? BigInt(0) : BigInt(frac);
    BigInt num = (negative ? -w : w) * scale + f;
    return negative ? Rational(-num, scale) : Rational(num, scale);
  }
  if (!is_int(text)) throw InvalidParam("cannot parse rational '" + text + "'");
  return Rational(BigInt(text));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt floor_of(const Rational& q) {
  BigInt n = numerator(q);
  BigInt d = denominator(q);
  BigInt f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

BigInt ceil_of(const Rational& q) {
  BigInt f = floor_of(q);
  return Rational(f) == q ? f : f + 1;
}

std::size_t floor_size(const Rational& q) {
  BigInt f = floor_of(q);
  if (f < 0) throw OutOfRange("negative length");
  return f.convert_to<std::size_t>();
}

std::size_t ceil_size(const Rational& q) {
  BigInt c = ceil_of(q);
  if (c < 0) throw OutOfRange("negative length");
  return c.convert_to<std::size_t>();
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t w = 0;
  while (w < 64 && (std::size_t{1} << w) < n) ++w;
  return w;
}

std::size_t index_width(std::size_t n) {
  std::size_t w = ceil_log2(n);
  return w == 0 ? 1 : w;
}

}  // namespace crldc
