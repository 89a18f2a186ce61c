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

#include "ptincl/crypto/bigint.hpp"

#include "ptincl/error.hpp"

namespace ptincl::crypto {

BigInt PowerOfTwo(unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

size_t ByteLength(const BigInt& v) {
  if (v == 0) return 0;
  return (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
}

std::vector<uint8_t> MagnitudeBytes(const BigInt& v, size_t min_width) {
  const size_t len = ByteLength(v);
  const size_t width = len < min_width ? min_width : len;
  std::vector<uint8_t> out(width, 0);
  if (len > 0) {
    size_t written = 0;
    mpz_export(out.data() + (width - len), &written, 1, 1, 1, 0,
               v.get_mpz_t());
  }
  return out;
}

BigInt FromMagnitudeBytes(std::span<const uint8_t> bytes) {
  BigInt out;
  if (!bytes.empty()) {
    mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return out;
}

BigInt PowMod(const BigInt& base, const BigInt& exponent,
              const BigInt& modulus) {
  BigInt out;
  if (exponent < 0) {
    const BigInt inv = InvertMod(base, modulus);
    const BigInt e = -exponent;
    mpz_powm(out.get_mpz_t(), inv.get_mpz_t(), e.get_mpz_t(),
             modulus.get_mpz_t());
  } else {
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
             modulus.get_mpz_t());
  }
  return out;
}

BigInt InvertMod(const BigInt& v, const BigInt& modulus) {
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kValueOutOfRange, "value is not invertible");
  }
  return out;
}

bool IsProbablePrime(const BigInt& v) {
  // GMP runs Baillie-PSW plus (reps - 24) Miller-Rabin rounds; 40 reps keeps
  // the error rate far below 2^-64.
  return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

}  // namespace ptincl::crypto
