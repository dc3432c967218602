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
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "crldc/bitstring.hpp"

namespace crldc {

// Opaque secret key material. Only the scheme that produced it can use it;
// it is never serialized except through the explicit testing export.
class SecretKey {
 public:
  SecretKey() = default;
  explicit SecretKey(std::vector<std::uint8_t> material)
      : material_(std::move(material)) {}

  const std::vector<std::uint8_t>& material() const { return material_; }
  std::string export_hex_for_testing() const;

 private:
  std::vector<std::uint8_t> material_;
};

struct SignatureKeyPair {
  BitString pk;
  SecretKey sk;
  std::size_t lambda = 0;
};

// Gen / Sign / Ver with fixed signature length r(lambda) and public key
// length pk_len(lambda). Ver is deterministic.
class SignatureScheme {
 public:
  virtual ~SignatureScheme() = default;

  virtual std::string name() const = 0;
  virtual std::size_t lambda() const = 0;
  virtual std::size_t sig_len() const = 0;
  virtual std::size_t pk_len() const = 0;

  virtual SignatureKeyPair gen(std::mt19937_64& rng) const = 0;
  virtual BitString sign(const SecretKey& sk, const BitString& m) const = 0;
  // Throws MalformedInput when |pk| or |sigma| has the wrong length.
  virtual bool verify(const BitString& pk, const BitString& m,
                      const BitString& sigma) const = 0;
};

// Schnorr signatures in a prime-order subgroup of Z_p^*, with p a
// lambda-bit prime and q a (lambda/2)-bit prime dividing p - 1.
// Signatures are (e, s) with e the truncated SHA-256 challenge, so
// r(lambda) = pk_len(lambda) = lambda. Nonces are derived from the secret
// key and message, so signing is deterministic.
class SchnorrScheme : public SignatureScheme {
 public:
  // Supported lambda: 64, 128, 256. Throws UnsupportedLambda otherwise.
  explicit SchnorrScheme(std::size_t lambda);
  ~SchnorrScheme() override;

  std::string name() const override { return "schnorr"; }
  std::size_t lambda() const override { return lambda_; }
  std::size_t sig_len() const override { return lambda_; }
  std::size_t pk_len() const override { return lambda_; }

  SignatureKeyPair gen(std::mt19937_64& rng) const override;
  BitString sign(const SecretKey& sk, const BitString& m) const override;
  bool verify(const BitString& pk, const BitString& m,
              const BitString& sigma) const override;

  static std::vector<std::size_t> supported_lambdas();

 private:
  struct Group;
  std::size_t lambda_;
  std::unique_ptr<Group> group_;
};

std::unique_ptr<SignatureScheme> make_signature_scheme(
    const std::string& name, std::size_t lambda);

// Decorator that records every (pk, m, sigma) triple Ver accepted.
class RecordingScheme : public SignatureScheme {
 public:
  struct Accepted {
    BitString pk;
    BitString message;
    BitString signature;
  };

  explicit RecordingScheme(const SignatureScheme& inner) : inner_(inner) {}

  std::string name() const override { return inner_.name(); }
  std::size_t lambda() const override { return inner_.lambda(); }
  std::size_t sig_len() const override { return inner_.sig_len(); }
  std::size_t pk_len() const override { return inner_.pk_len(); }

  SignatureKeyPair gen(std::mt19937_64& rng) const override {
    return inner_.gen(rng);
  }
  BitString sign(const SecretKey& sk, const BitString& m) const override {
    return inner_.sign(sk, m);
  }
  bool verify(const BitString& pk, const BitString& m,
              const BitString& sigma) const override;

  const std::vector<Accepted>& accepted() const { return accepted_; }
  std::size_t verify_calls() const { return calls_; }
  void clear() const {
    accepted_.clear();
    calls_ = 0;
  }

 private:
  const SignatureScheme& inner_;
  mutable std::vector<Accepted> accepted_;
  mutable std::size_t calls_ = 0;
};

}  // namespace crldc
