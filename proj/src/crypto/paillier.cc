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

#include "ptincl/crypto/paillier.hpp"

#include <sodium.h>

#include <array>
#include <string>

#include "ptincl/error.hpp"

namespace ptincl::crypto {

namespace {

uint64_t Fingerprint(const BigInt& n) {
  EnsureSodium();
  const std::vector<uint8_t> bytes = MagnitudeBytes(n);
  std::array<uint8_t, 8> h{};
  crypto_generichash(h.data(), h.size(), bytes.data(), bytes.size(), nullptr,
                     0);
  uint64_t v = 0;
  for (uint8_t b : h) v = (v << 8) | b;
  return v;
}

BigInt RandomPrime(unsigned bits, Rng& rng) {
  const BigInt top = PowerOfTwo(bits - 1) + PowerOfTwo(bits - 2);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BigInt candidate = rng.Bits(bits) | top | 1;
    BigInt prime;
    mpz_nextprime(prime.get_mpz_t(), candidate.get_mpz_t());
    if (mpz_sizeinbase(prime.get_mpz_t(), 2) == bits &&
        IsProbablePrime(prime)) {
      return prime;
    }
  }
  throw Error(ErrorCode::kGenerationFailure, "prime search failed");
}

// L(x) = (x - 1) / d
BigInt LFunction(const BigInt& x, const BigInt& d) { return (x - 1) / d; }

}  // namespace

AdditivePublicKey::AdditivePublicKey(BigInt n, BigInt plaintext_bound)
    : n_(std::move(n)),
      n_squared_(n_ * n_),
      encoding_(n_, std::move(plaintext_bound)),
      fingerprint_(Fingerprint(n_)) {}

unsigned AdditivePublicKey::bits() const {
  return static_cast<unsigned>(mpz_sizeinbase(n_.get_mpz_t(), 2));
}

void AdditivePublicKey::CheckKey(const AdditiveCiphertext& c) const {
  if (c.key_fingerprint != fingerprint_) {
    throw Error(ErrorCode::kKeyMismatch,
                "ciphertext belongs to a different public key");
  }
}

BigInt AdditivePublicKey::RandomFactor(Rng& rng) const {
  while (true) {
    BigInt r = rng.Below(n_);
    if (r == 0) continue;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), n_.get_mpz_t());
    if (g == 1) return r;
  }
}

AdditiveCiphertext AdditivePublicKey::Encrypt(const BigInt& m,
                                              Rng& rng) const {
  const BigInt encoded = encoding_.Encode(m);
  const BigInt rn = PowMod(RandomFactor(rng), n_, n_squared_);
  BigInt c = (1 + encoded * n_) % n_squared_;
  c = (c * rn) % n_squared_;
  return {std::move(c), fingerprint_};
}

AdditiveCiphertext AdditivePublicKey::Add(const AdditiveCiphertext& a,
                                          const AdditiveCiphertext& b) const {
  CheckKey(a);
  CheckKey(b);
  BigInt c = (a.value * b.value) % n_squared_;
  return {std::move(c), fingerprint_};
}

AdditiveCiphertext AdditivePublicKey::ScalarMul(const AdditiveCiphertext& c,
                                                const BigInt& k) const {
  CheckKey(c);
  return {PowMod(c.value, k, n_squared_), fingerprint_};
}

AdditiveCiphertext AdditivePublicKey::Rerandomize(const AdditiveCiphertext& c,
                                                  Rng& rng) const {
  CheckKey(c);
  const BigInt rn = PowMod(RandomFactor(rng), n_, n_squared_);
  BigInt out = (c.value * rn) % n_squared_;
  return {std::move(out), fingerprint_};
}

AdditiveCiphertext AdditivePublicKey::Embed(const BigInt& m) const {
  BigInt c = (1 + encoding_.Encode(m) * n_) % n_squared_;
  return {std::move(c), fingerprint_};
}

AdditiveCiphertext AdditivePublicKey::Import(const BigInt& value) const {
  if (value <= 0 || value >= n_squared_) {
    throw Error(ErrorCode::kValueOutOfRange,
                "ciphertext outside the ciphertext domain");
  }
  return {value, fingerprint_};
}

AdditiveKeyPair AdditiveKeyPair::Generate(unsigned bits, Rng& rng,
                                          const BigInt& plaintext_bound) {
  if (bits < 256 || bits % 2 != 0) {
    throw Error(ErrorCode::kValidation,
                "additive key size must be an even number >= 256, got " +
                    std::to_string(bits));
  }
  const BigInt p = RandomPrime(bits / 2, rng);
  BigInt q;
  do {
    q = RandomPrime(bits / 2, rng);
  } while (q == p);
  return AdditiveKeyPair(p, q, plaintext_bound);
}

AdditiveKeyPair AdditiveKeyPair::FromPrimes(const BigInt& p, const BigInt& q,
                                            const BigInt& plaintext_bound) {
  if (p == q || !IsProbablePrime(p) || !IsProbablePrime(q)) {
    throw Error(ErrorCode::kValidation, "key primes must be distinct primes");
  }
  return AdditiveKeyPair(p, q, plaintext_bound);
}

AdditiveKeyPair::AdditiveKeyPair(const BigInt& p, const BigInt& q,
                                 const BigInt& plaintext_bound)
    : public_(std::make_shared<const AdditivePublicKey>(p * q,
                                                        plaintext_bound)),
      p_(p),
      q_(q),
      p_squared_(p * p),
      q_squared_(q * q) {
  const BigInt& n = public_->n();
  const BigInt g = n + 1;
  hp_ = InvertMod(LFunction(PowMod(g, p_ - 1, p_squared_), p_), p_);
  hq_ = InvertMod(LFunction(PowMod(g, q_ - 1, q_squared_), q_), q_);
  q_inv_mod_p_ = InvertMod(q_, p_);
  q2_inv_mod_p2_ = InvertMod(q_squared_, p_squared_);
  n_mod_phi_p2_ = n % (p_ * (p_ - 1));
  n_mod_phi_q2_ = n % (q_ * (q_ - 1));
}

AdditiveCiphertext AdditiveKeyPair::Encrypt(const BigInt& m, Rng& rng) const {
  const AdditivePublicKey& pk = *public_;
  const BigInt encoded = pk.encoding().Encode(m);
  BigInt r;
  while (true) {
    r = rng.Below(pk.n());
    if (r == 0) continue;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pk.n().get_mpz_t());
    if (g == 1) break;
  }
  // r^N mod N^2 through the two prime-square components.
  const BigInt a = PowMod(r % p_squared_, n_mod_phi_p2_, p_squared_);
  const BigInt b = PowMod(r % q_squared_, n_mod_phi_q2_, q_squared_);
  BigInt diff = ((a - b) * q2_inv_mod_p2_) % p_squared_;
  if (diff < 0) diff += p_squared_;
  const BigInt rn = b + q_squared_ * diff;
  BigInt c = ((1 + encoded * pk.n()) * rn) % pk.n_squared();
  return {std::move(c), pk.fingerprint()};
}

BigInt AdditiveKeyPair::Decrypt(const AdditiveCiphertext& c) const {
  const AdditivePublicKey& pk = *public_;
  if (c.key_fingerprint != pk.fingerprint()) {
    throw Error(ErrorCode::kKeyMismatch,
                "ciphertext belongs to a different public key");
  }
  const BigInt mp =
      (LFunction(PowMod(c.value % p_squared_, p_ - 1, p_squared_), p_) * hp_) %
      p_;
  const BigInt mq =
      (LFunction(PowMod(c.value % q_squared_, q_ - 1, q_squared_), q_) * hq_) %
      q_;
  BigInt h = ((mp - mq) * q_inv_mod_p_) % p_;
  if (h < 0) h += p_;
  const BigInt m = mq + q_ * h;
  return DecodeSigned(m, pk.n());
}

}  // namespace ptincl::crypto
