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
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crldc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

Rational make_rational(long long num, long long den = 1);
// Parses "p/q", an integer, or a terminating decimal such as "0.05".
Rational parse_rational(const std::string& text);
double to_double(const Rational& q);
BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);
std::size_t floor_size(const Rational& q);
std::size_t ceil_size(const Rational& q);
std::string to_string(const Rational& q);

// Smallest w with 2^w >= n (0 for n <= 1).
std::size_t ceil_log2(std::size_t n);
// Width of a big-endian index field for values in [1, n]; at least 1.
std::size_t index_width(std::size_t n);

}  // namespace crldc
