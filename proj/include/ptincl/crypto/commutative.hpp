/*
 * Copyright 2026 The ptincl Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PTINCL_CRYPTO_COMMUTATIVE_HPP_
#define PTINCL_CRYPTO_COMMUTATIVE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>

#include "ptincl/crypto/bigint.hpp"
#include "ptincl/crypto/rng.hpp"

namespace ptincl::crypto {

inline constexpr unsigned kDefaultCommutativeBits = 512;

// Shared safe prime p = 2q + 1 for exponentiation layers. Setup is a
// deterministic function of (bits, public_seed), so both parties derive the
// same group independently.
class CommutativeGroup {
 public:
  // Results are cached per process. Throws Error(kValidation) for bits < 64.
  static std::shared_ptr<const CommutativeGroup> Setup(unsigned bits,
                                                       uint64_t public_seed);
  static std::shared_ptr<const CommutativeGroup> FromPrime(const BigInt& p);

  const BigInt& p() const { return p_; }
  unsigned bits() const;
  size_t width() const { return ByteLength(p_); }
  uint64_t fingerprint() const { return fingerprint_; }

  // Signed value to [0, p) and back.
  BigInt Encode(const BigInt& x) const;
  BigInt Decode(const BigInt& v) const;
  // Throws Error(kValueOutOfRange) unless 0 <= v < p.
  void CheckElement(const BigInt& v) const;

  explicit CommutativeGroup(BigInt p);

 private:
  BigInt p_;
  uint64_t fingerprint_;
};

// Secret exponent pair (e, d) with e * d = 1 mod (p - 1). Layers of
// different keys over the same group commute, and each layer is
// multiplicative: Layer(x) * Layer(y) = Layer(x * y mod p).
// Layer(0) = 0, so zero values stay visible through any number of layers.
class CommutativeKey {
 public:
  static CommutativeKey Generate(std::shared_ptr<const CommutativeGroup> group,
                                 Rng& rng);
  static CommutativeKey FromExponent(
      std::shared_ptr<const CommutativeGroup> group, const BigInt& e);

  BigInt Layer(const BigInt& x) const;
  BigInt Unlayer(const BigInt& x) const;
  // Multiplies two group elements.
  BigInt Multiply(const BigInt& x, const BigInt& y) const;

  const CommutativeGroup& group() const { return *group_; }
  const BigInt& e() const { return e_; }
  const BigInt& d() const { return d_; }

 private:
  CommutativeKey(std::shared_ptr<const CommutativeGroup> group, BigInt e,
                 BigInt d);

  std::shared_ptr<const CommutativeGroup> group_;
  BigInt e_;
  BigInt d_;
};

}  // namespace ptincl::crypto

#endif  // PTINCL_CRYPTO_COMMUTATIVE_HPP_
