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

#include "ptincl/crypto/commutative.hpp"

#include <sodium.h>

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "ptincl/crypto/encoding.hpp"
#include "ptincl/error.hpp"

namespace ptincl::crypto {

namespace {

constexpr unsigned kSmallPrimes[] = {
    3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,
    53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269,
    271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353,
    359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433, 439,
    443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523,
    541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617,
    619, 631, 641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701, 709,
    719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787, 797, 809, 811,
    821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907,
    911, 919, 929, 937, 941, 947, 953, 967, 971, 977, 983, 991, 997};

// q and 2q + 1 both survive trial division.
bool PassesSieve(const BigInt& q) {
  for (unsigned s : kSmallPrimes) {
    const unsigned long r = mpz_fdiv_ui(q.get_mpz_t(), s);
    if (r == 0 || r == (s - 1) / 2) return false;
  }
  return true;
}

BigInt FindSafePrime(unsigned bits, uint64_t public_seed) {
  Rng rng(Seed::FromU64(public_seed)
              .Derive("ptincl/commutative/" + std::to_string(bits)));
  const BigInt top = PowerOfTwo(bits - 2);
  const BigInt two(2);
  for (unsigned long attempt = 0; attempt < 50'000'000UL; ++attempt) {
    // q has bits-1 bits, q = 2 mod 3 is implied by the sieve.
    BigInt q = rng.Bits(bits - 1) | top | 1;
    if (!PassesSieve(q)) continue;
    const BigInt p = 2 * q + 1;
    if (PowMod(two, p - 1, p) != 1) continue;
    if (mpz_probab_prime_p(q.get_mpz_t(), 1) == 0) continue;
    if (IsProbablePrime(q) && IsProbablePrime(p)) return p;
  }
  throw Error(ErrorCode::kGenerationFailure, "safe prime search failed");
}

uint64_t GroupFingerprint(const BigInt& p) {
  EnsureSodium();
  const std::vector<uint8_t> bytes = MagnitudeBytes(p);
  std::array<uint8_t, 8> h{};
  crypto_generichash(h.data(), h.size(), bytes.data(), bytes.size(), nullptr,
                     0);
  uint64_t v = 0;
  for (uint8_t b : h) v = (v << 8) | b;
  return v;
}

}  // namespace

CommutativeGroup::CommutativeGroup(BigInt p)
    : p_(std::move(p)), fingerprint_(GroupFingerprint(p_)) {}

std::shared_ptr<const CommutativeGroup> CommutativeGroup::Setup(
    unsigned bits, uint64_t public_seed) {
  if (bits < 64) {
    throw Error(ErrorCode::kValidation,
                "commutative modulus must have at least 64 bits, got " +
                    std::to_string(bits));
  }
  static std::mutex mu;
  static std::map<std::pair<unsigned, uint64_t>,
                  std::shared_ptr<const CommutativeGroup>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{bits, public_seed}];
  if (!slot) {
    slot = std::make_shared<const CommutativeGroup>(
        FindSafePrime(bits, public_seed));
  }
  return slot;
}

std::shared_ptr<const CommutativeGroup> CommutativeGroup::FromPrime(
    const BigInt& p) {
  const BigInt q = (p - 1) / 2;
  if (p < 7 || p % 2 == 0 || !IsProbablePrime(p) || !IsProbablePrime(q)) {
    throw Error(ErrorCode::kValidation, "modulus is not a safe prime");
  }
  return std::make_shared<const CommutativeGroup>(p);
}

unsigned CommutativeGroup::bits() const {
  return static_cast<unsigned>(mpz_sizeinbase(p_.get_mpz_t(), 2));
}

BigInt CommutativeGroup::Encode(const BigInt& x) const {
  return EncodeSigned(x, p_);
}

BigInt CommutativeGroup::Decode(const BigInt& v) const {
  CheckElement(v);
  return DecodeSigned(v, p_);
}

void CommutativeGroup::CheckElement(const BigInt& v) const {
  if (v < 0 || v >= p_) {
    throw Error(ErrorCode::kValueOutOfRange,
                "value outside the commutative group");
  }
}

CommutativeKey::CommutativeKey(std::shared_ptr<const CommutativeGroup> group,
                               BigInt e, BigInt d)
    : group_(std::move(group)), e_(std::move(e)), d_(std::move(d)) {}

CommutativeKey CommutativeKey::Generate(
    std::shared_ptr<const CommutativeGroup> group, Rng& rng) {
  const BigInt order = group->p() - 1;
  while (true) {
    BigInt e = rng.InRange(3, order - 1) | 1;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), order.get_mpz_t());
    if (g != 1) continue;
    BigInt d = InvertMod(e, order);
    return CommutativeKey(std::move(group), std::move(e), std::move(d));
  }
}

CommutativeKey CommutativeKey::FromExponent(
    std::shared_ptr<const CommutativeGroup> group, const BigInt& e) {
  const BigInt order = group->p() - 1;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), order.get_mpz_t());
  if (e <= 1 || e >= order || g != 1) {
    throw Error(ErrorCode::kValidation, "exponent not invertible mod p-1");
  }
  return CommutativeKey(std::move(group), e, InvertMod(e, order));
}

BigInt CommutativeKey::Layer(const BigInt& x) const {
  group_->CheckElement(x);
  return PowMod(x, e_, group_->p());
}

BigInt CommutativeKey::Unlayer(const BigInt& x) const {
  group_->CheckElement(x);
  return PowMod(x, d_, group_->p());
}

BigInt CommutativeKey::Multiply(const BigInt& x, const BigInt& y) const {
  group_->CheckElement(x);
  group_->CheckElement(y);
  BigInt out = (x * y) % group_->p();
  return out;
}

}  // namespace ptincl::crypto
