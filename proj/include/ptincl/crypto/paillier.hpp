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

#ifndef PTINCL_CRYPTO_PAILLIER_HPP_
#define PTINCL_CRYPTO_PAILLIER_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>

#include "ptincl/crypto/bigint.hpp"
#include "ptincl/crypto/encoding.hpp"
#include "ptincl/crypto/rng.hpp"

namespace ptincl::crypto {

// Default admissible plaintext magnitude.
inline constexpr unsigned kDefaultPlaintextBoundBits = 120;

// Ciphertext modulo N^2, tagged with the fingerprint of the key that
// produced it.
struct AdditiveCiphertext {
  BigInt value;
  uint64_t key_fingerprint = 0;
};

// Paillier public key with generator g = N + 1. Plaintexts are signed
// integers encoded on (-N/2, N/2).
class AdditivePublicKey {
 public:
  AdditivePublicKey(BigInt n, BigInt plaintext_bound);

  const BigInt& n() const { return n_; }
  const BigInt& n_squared() const { return n_squared_; }
  unsigned bits() const;
  // Fixed serialized width of a ciphertext magnitude, in bytes.
  size_t ciphertext_width() const { return ByteLength(n_squared_); }
  uint64_t fingerprint() const { return fingerprint_; }
  const SignedEncoding& encoding() const { return encoding_; }
  const BigInt& plaintext_bound() const { return encoding_.bound(); }

  // Throws Error(kPlaintextOutOfRange) when |m| exceeds the bound.
  AdditiveCiphertext Encrypt(const BigInt& m, Rng& rng) const;
  AdditiveCiphertext Add(const AdditiveCiphertext& a,
                         const AdditiveCiphertext& b) const;
  AdditiveCiphertext ScalarMul(const AdditiveCiphertext& c,
                               const BigInt& k) const;
  AdditiveCiphertext Rerandomize(const AdditiveCiphertext& c, Rng& rng) const;
  // Deterministic encoding (1 + mN) with no randomizer. Only for use as an
  // operand that is rerandomized before leaving the process.
  AdditiveCiphertext Embed(const BigInt& m) const;

  // Wraps a received ciphertext value after range checking it.
  AdditiveCiphertext Import(const BigInt& value) const;

  friend bool operator==(const AdditivePublicKey& a,
                         const AdditivePublicKey& b) {
    return a.n_ == b.n_ && a.plaintext_bound() == b.plaintext_bound();
  }

 private:
  void CheckKey(const AdditiveCiphertext& c) const;
  BigInt RandomFactor(Rng& rng) const;

  BigInt n_;
  BigInt n_squared_;
  SignedEncoding encoding_;
  uint64_t fingerprint_;
};

class AdditiveKeyPair {
 public:
  // `bits` is the bit length of N; both primes have bits/2 bits.
  static AdditiveKeyPair Generate(
      unsigned bits, Rng& rng,
      const BigInt& plaintext_bound = PowerOfTwo(kDefaultPlaintextBoundBits));
  static AdditiveKeyPair FromPrimes(const BigInt& p, const BigInt& q,
                                    const BigInt& plaintext_bound);

  const AdditivePublicKey& public_key() const { return *public_; }
  std::shared_ptr<const AdditivePublicKey> shared_public_key() const {
    return public_;
  }
  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }

  // Same distribution as the public-key encryption, computed with CRT.
  AdditiveCiphertext Encrypt(const BigInt& m, Rng& rng) const;
  // Signed plaintext in (-N/2, N/2). Throws Error(kKeyMismatch) for a
  // ciphertext of another key.
  BigInt Decrypt(const AdditiveCiphertext& c) const;

 private:
  AdditiveKeyPair(const BigInt& p, const BigInt& q,
                  const BigInt& plaintext_bound);

  std::shared_ptr<const AdditivePublicKey> public_;
  BigInt p_, q_;
  BigInt p_squared_, q_squared_;
  BigInt hp_, hq_;
  BigInt q_inv_mod_p_;              // q^-1 mod p
  BigInt q2_inv_mod_p2_;            // (q^2)^-1 mod p^2
  BigInt n_mod_phi_p2_, n_mod_phi_q2_;
};

}  // namespace ptincl::crypto

#endif  // PTINCL_CRYPTO_PAILLIER_HPP_
