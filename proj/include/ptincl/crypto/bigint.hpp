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

#ifndef PTINCL_CRYPTO_BIGINT_HPP_
#define PTINCL_CRYPTO_BIGINT_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ptincl::crypto {

using BigInt = mpz_class;

inline BigInt FromInt64(int64_t v) { return BigInt(static_cast<long>(v)); }

BigInt PowerOfTwo(unsigned exponent);

inline int SignOf(const BigInt& v) { return sgn(v); }

// Number of bytes in the big-endian magnitude (0 for zero).
size_t ByteLength(const BigInt& v);

// Big-endian magnitude, left-padded with zeros to at least min_width bytes.
std::vector<uint8_t> MagnitudeBytes(const BigInt& v, size_t min_width = 0);

BigInt FromMagnitudeBytes(std::span<const uint8_t> bytes);

// Modular exponentiation. A negative exponent uses the modular inverse.
BigInt PowMod(const BigInt& base, const BigInt& exponent,
              const BigInt& modulus);

BigInt InvertMod(const BigInt& v, const BigInt& modulus);

// Probable-prime test with a false-positive rate below 2^-64.
bool IsProbablePrime(const BigInt& v);

}  // namespace ptincl::crypto

#endif  // PTINCL_CRYPTO_BIGINT_HPP_
