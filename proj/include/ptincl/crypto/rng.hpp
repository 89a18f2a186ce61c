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

#ifndef PTINCL_CRYPTO_RNG_HPP_
#define PTINCL_CRYPTO_RNG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "ptincl/crypto/bigint.hpp"

namespace ptincl::crypto {

// 32 bytes of seed material. Derive() performs a labeled expansion so that
// one master seed yields independent per-party and per-purpose streams.
class Seed {
 public:
  static constexpr size_t kSize = 32;

  Seed() = default;
  explicit Seed(const std::array<uint8_t, kSize>& bytes) : bytes_(bytes) {}

  static Seed FromU64(uint64_t value);
  // Throws Error(kEntropy) if the system entropy source is unavailable.
  static Seed FromEntropy();

  Seed Derive(std::string_view label) const;

  const std::array<uint8_t, kSize>& bytes() const { return bytes_; }

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  std::array<uint8_t, kSize> bytes_{};
};

// Deterministic ChaCha20 keystream generator. Not thread-safe; every
// execution context owns its own instance.
class Rng {
 public:
  explicit Rng(const Seed& seed);

  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;
  Rng(Rng&&) = default;
  Rng& operator=(Rng&&) = default;

  void Fill(std::span<uint8_t> out);
  uint64_t NextU64();
  // Uniform in [0, bound). bound must be positive.
  uint64_t Uniform(uint64_t bound);

  // Uniform in [0, bound).
  BigInt Below(const BigInt& bound);
  // Uniform in [lo, hi], inclusive.
  BigInt InRange(const BigInt& lo, const BigInt& hi);
  // Uniform in [-2^bits, 2^bits].
  BigInt SignedBits(unsigned bits);
  // Exactly `bits` random bits, top bit not forced.
  BigInt Bits(unsigned bits);

 private:
  void Refill();

  std::array<uint8_t, 32> key_{};
  std::array<uint8_t, 1024> buffer_{};
  size_t pos_ = 0;
  uint32_t block_counter_ = 0;
};

// Initializes libsodium once. Throws Error(kEntropy) on failure.
void EnsureSodium();

}  // namespace ptincl::crypto

#endif  // PTINCL_CRYPTO_RNG_HPP_
