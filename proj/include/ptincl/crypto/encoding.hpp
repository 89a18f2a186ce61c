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

#ifndef PTINCL_CRYPTO_ENCODING_HPP_
#define PTINCL_CRYPTO_ENCODING_HPP_

#include "ptincl/crypto/bigint.hpp"

namespace ptincl::crypto {

// Maps x in [-(modulus-1)/2, (modulus-1)/2] to [0, modulus). Throws
// Error(kValueOutOfRange) outside that interval.
BigInt EncodeSigned(const BigInt& x, const BigInt& modulus);

// Inverse of EncodeSigned for v in [0, modulus).
BigInt DecodeSigned(const BigInt& v, const BigInt& modulus);

// Signed plaintext encoding with an explicit admissible bound, which must be
// below modulus / 2.
class SignedEncoding {
 public:
  SignedEncoding(BigInt modulus, BigInt bound);

  // Throws Error(kPlaintextOutOfRange) when |x| > bound.
  BigInt Encode(const BigInt& x) const;
  BigInt Decode(const BigInt& v) const;
  bool Admissible(const BigInt& x) const { return abs(x) <= bound_; }

  const BigInt& bound() const { return bound_; }
  const BigInt& modulus() const { return modulus_; }

 private:
  BigInt modulus_;
  BigInt bound_;
};

}  // namespace ptincl::crypto

#endif  // PTINCL_CRYPTO_ENCODING_HPP_
