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

#include "ptincl/crypto/encoding.hpp"

#include "ptincl/error.hpp"

namespace ptincl::crypto {

BigInt EncodeSigned(const BigInt& x, const BigInt& modulus) {
  const BigInt half = (modulus - 1) / 2;
  if (abs(x) > half) {
    throw Error(ErrorCode::kValueOutOfRange,
                "signed value does not fit the modulus");
  }
  return x < 0 ? BigInt(x + modulus) : x;
}

BigInt DecodeSigned(const BigInt& v, const BigInt& modulus) {
  if (v < 0 || v >= modulus) {
    throw Error(ErrorCode::kValueOutOfRange, "encoded value out of range");
  }
  const BigInt half = (modulus - 1) / 2;
  return v > half ? BigInt(v - modulus) : v;
}

SignedEncoding::SignedEncoding(BigInt modulus, BigInt bound)
    : modulus_(std::move(modulus)), bound_(std::move(bound)) {
  if (bound_ < 0 || 2 * bound_ >= modulus_) {
    throw Error(ErrorCode::kValidation,
                "plaintext bound must be below half the modulus");
  }
}

BigInt SignedEncoding::Encode(const BigInt& x) const {
  if (!Admissible(x)) {
    throw Error(ErrorCode::kPlaintextOutOfRange,
                "plaintext magnitude exceeds the admissible bound");
  }
  return EncodeSigned(x, modulus_);
}

BigInt SignedEncoding::Decode(const BigInt& v) const {
  return DecodeSigned(v, modulus_);
}

}  // namespace ptincl::crypto
