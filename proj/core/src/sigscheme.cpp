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

#include "crldc/sigscheme.hpp"

#include <openssl/evp.h>

#include <array>
#include <boost/multiprecision/cpp_int.hpp>

#include "crldc/errors.hpp"

namespace crldc {

namespace {

using boost::multiprecision::cpp_int;

struct GroupConstants {
  std::size_t lambda;
  const char* p;
  const char* q;
  const char* g;
};

// p is a lambda-bit prime, q a (lambda/2)-bit prime with q | p - 1, and g
// generates the order-q subgroup.
constexpr std::array<GroupConstants, 3> kGroups = {{
    {64, "0xecbd35a61f5d727d", "0xdb5586e9", "0xb82d7867b21d531"},
    {128, "0xc3559485b2165ca57c611481a4d87341", "0xbd550f380c91c897",
     "0x2a6926562ddf16aae96a49bb8bd379bd"},
    {256,
     "0xeee39fe7fc467ddd1ad92f77ab030667f06801c0d60a4e7b5c2ac8ca360b5e27",
     "0xe235b69746ceacffe5f3c6fe73900ef9",
     "0xbd0f67d9cf377dc315e2f40e41fd5ae1b7ebbaca9f3644977804bf370d1854a"},
}};

std::array<std::uint8_t, 32> sha256(const std::vector<std::uint8_t>& data) {
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  return out;
}

std::vector<std::uint8_t> to_fixed_bytes(const cpp_int& v, std::size_t bytes) {
  std::vector<std::uint8_t> out(bytes, 0);
  cpp_int t = v;
  for (std::size_t k = 0; k < bytes; ++k) {
    out[bytes - 1 - k] = static_cast<std::uint8_t>(t & 0xff);
    t >>= 8;
  }
  return out;
}

cpp_int bits_to_int(const BitString& b, std::size_t a, std::size_t e) {
  cpp_int v = 0;
  for (std::size_t k = a; k <= e; ++k) {
    v <<= 1;
    if (b.bit(k)) v |= 1;
  }
  return v;
}

BitString int_to_bits(const cpp_int& v, std::size_t width) {
  BitString out(width);
  for (std::size_t k = 0; k < width; ++k) {
    if (boost::multiprecision::bit_test(v, static_cast<unsigned>(width - 1 - k))) {
      out.set_bit(k + 1, true);
    }
  }
  return out;
}

void append_message(std::vector<std::uint8_t>& buf, const BitString& m) {
  std::uint64_t n = m.size();
  for (int k = 0; k < 8; ++k) buf.push_back(static_cast<std::uint8_t>(n >> (8 * k)));
  auto packed = m.to_bytes();
  buf.insert(buf.end(), packed.begin(), packed.end());
}

cpp_int hash_to_int(const std::array<std::uint8_t, 32>& h, std::size_t bits) {
  cpp_int v = 0;
  for (std::uint8_t byte : h) v = (v << 8) | byte;
  return v >> (256 - bits);
}

}  // namespace

std::string SecretKey::export_hex_for_testing() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : material_) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

struct SchnorrScheme::Group {
  cpp_int p;
  cpp_int q;
  cpp_int g;
  std::size_t half;  // bit length of q, and of each signature component
};

SchnorrScheme::SchnorrScheme(std::size_t lambda) : lambda_(lambda) {
  for (const auto& c : kGroups) {
    if (c.lambda == lambda) {
      group_ = std::make_unique<Group>();
      group_->p = cpp_int(c.p);
      group_->q = cpp_int(c.q);
      group_->g = cpp_int(c.g);
      group_->half = lambda / 2;
      return;
    }
  }
  throw UnsupportedLambda("schnorr supports lambda in {64, 128, 256}, got " +
                          std::to_string(lambda));
}

SchnorrScheme::~SchnorrScheme() = default;

std::vector<std::size_t> SchnorrScheme::supported_lambdas() {
  return {64, 128, 256};
}

SignatureKeyPair SchnorrScheme::gen(std::mt19937_64& rng) const {
  const Group& G = *group_;
  cpp_int draw = 0;
  for (std::size_t k = 0; k < G.half / 64 + 2; ++k) draw = (draw << 64) | rng();
  cpp_int x = draw % (G.q - 1) + 1;
  cpp_int y = boost::multiprecision::powm(G.g, x, G.p);
  SignatureKeyPair kp;
  kp.lambda = lambda_;
  kp.pk = int_to_bits(y, lambda_);
  kp.sk = SecretKey(to_fixed_bytes(x, G.half / 8));
  return kp;
}

BitString SchnorrScheme::sign(const SecretKey& sk, const BitString& m) const {
  const Group& G = *group_;
  if (sk.material().size() != G.half / 8) {
    throw MalformedInput("secret key does not belong to this scheme");
  }
  cpp_int x = 0;
  for (std::uint8_t b : sk.material()) x = (x << 8) | b;

  std::vector<std::uint8_t> nonce_in{0x02};
  nonce_in.insert(nonce_in.end(), sk.material().begin(), sk.material().end());
  append_message(nonce_in, m);
  cpp_int k = hash_to_int(sha256(nonce_in), 256) % G.q;
  if (k == 0) k = 1;

  cpp_int r = boost::multiprecision::powm(G.g, k, G.p);
  std::vector<std::uint8_t> chal{0x01};
  auto rb = to_fixed_bytes(r, lambda_ / 8);
  chal.insert(chal.end(), rb.begin(), rb.end());
  append_message(chal, m);
  cpp_int e = hash_to_int(sha256(chal), G.half);
  cpp_int s = (k + G.q - (x * e) % G.q) % G.q;
  return int_to_bits(e, G.half) + int_to_bits(s, G.half);
}

bool SchnorrScheme::verify(const BitString& pk, const BitString& m,
                           const BitString& sigma) const {
  if (pk.size() != pk_len()) {
    throw MalformedInput("public key of " + std::to_string(pk.size()) +
                         " bits, expected " + std::to_string(pk_len()));
  }
  if (sigma.size() != sig_len()) {
    throw MalformedInput("signature of " + std::to_string(sigma.size()) +
                         " bits, expected " + std::to_string(sig_len()));
  }
  const Group& G = *group_;
  cpp_int y = bits_to_int(pk, 1, pk.size());
  if (y <= 1 || y >= G.p) return false;
  if (cpp_int(boost::multiprecision::powm(y, G.q, G.p)) != 1) return false;
  cpp_int e = bits_to_int(sigma, 1, G.half);
  cpp_int s = bits_to_int(sigma, G.half + 1, 2 * G.half);
  if (s >= G.q) return false;
  cpp_int gs = boost::multiprecision::powm(G.g, s, G.p);
  cpp_int ye = boost::multiprecision::powm(y, e, G.p);
  cpp_int r = (gs * ye) % G.p;
  std::vector<std::uint8_t> chal{0x01};
  auto rb = to_fixed_bytes(r, lambda_ / 8);
  chal.insert(chal.end(), rb.begin(), rb.end());
  append_message(chal, m);
  return hash_to_int(sha256(chal), G.half) == e;
}

std::unique_ptr<SignatureScheme> make_signature_scheme(const std::string& name,
                                                       std::size_t lambda) {
  if (name == "schnorr") return std::make_unique<SchnorrScheme>(lambda);
  throw InvalidParam("unknown signature scheme '" + name + "'");
}

bool RecordingScheme::verify(const BitString& pk, const BitString& m,
                             const BitString& sigma) const {
  ++calls_;
  bool ok = inner_.verify(pk, m, sigma);
  if (ok) accepted_.push_back({pk, m, sigma});
  return ok;
}

}  // namespace crldc
