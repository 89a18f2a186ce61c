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

#include "ptincl/crypto/rng.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <mutex>
#include <vector>

#include "ptincl/error.hpp"

namespace ptincl::crypto {

void EnsureSodium() {
  static std::once_flag once;
  static int status = 0;
  std::call_once(once, [] { status = sodium_init(); });
  if (status < 0) {
    throw Error(ErrorCode::kEntropy, "libsodium initialization failed");
  }
}

Seed Seed::FromU64(uint64_t value) {
  EnsureSodium();
  std::array<uint8_t, 8> be{};
  for (int i = 0; i < 8; ++i) be[i] = static_cast<uint8_t>(value >> (56 - 8 * i));
  static constexpr char kDomain[] = "ptincl/seed/u64";
  std::array<uint8_t, kSize> out{};
  crypto_generichash_state st;
  crypto_generichash_init(&st, nullptr, 0, kSize);
  crypto_generichash_update(&st, reinterpret_cast<const uint8_t*>(kDomain),
                            sizeof(kDomain) - 1);
  crypto_generichash_update(&st, be.data(), be.size());
  crypto_generichash_final(&st, out.data(), out.size());
  return Seed(out);
}

Seed Seed::FromEntropy() {
  EnsureSodium();
  std::array<uint8_t, kSize> out{};
  randombytes_buf(out.data(), out.size());
  return Seed(out);
}

Seed Seed::Derive(std::string_view label) const {
  EnsureSodium();
  std::array<uint8_t, kSize> out{};
  crypto_generichash(out.data(), out.size(),
                     reinterpret_cast<const uint8_t*>(label.data()),
                     label.size(), bytes_.data(), bytes_.size());
  return Seed(out);
}

Rng::Rng(const Seed& seed) : key_(seed.bytes()) {
  EnsureSodium();
  Refill();
}

void Rng::Refill() {
  static const std::array<uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES>
      kNonce{};
  std::fill(buffer_.begin(), buffer_.end(), 0);
  crypto_stream_chacha20_ietf_xor_ic(buffer_.data(), buffer_.data(),
                                     buffer_.size(), kNonce.data(),
                                     block_counter_, key_.data());
  block_counter_ += static_cast<uint32_t>(buffer_.size() / 64);
  pos_ = 0;
}

void Rng::Fill(std::span<uint8_t> out) {
  size_t done = 0;
  while (done < out.size()) {
    if (pos_ == buffer_.size()) Refill();
    const size_t take = std::min(out.size() - done, buffer_.size() - pos_);
    std::memcpy(out.data() + done, buffer_.data() + pos_, take);
    pos_ += take;
    done += take;
  }
}

uint64_t Rng::NextU64() {
  std::array<uint8_t, 8> b{};
  Fill(b);
  uint64_t v = 0;
  for (uint8_t byte : b) v = (v << 8) | byte;
  return v;
}

uint64_t Rng::Uniform(uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kValueOutOfRange, "empty range");
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    const uint64_t v = NextU64();
    if (v < limit) return v % bound;
  }
}

BigInt Rng::Bits(unsigned bits) {
  if (bits == 0) return 0;
  std::vector<uint8_t> bytes((bits + 7) / 8);
  Fill(bytes);
  const unsigned excess = static_cast<unsigned>(bytes.size() * 8 - bits);
  bytes[0] &= static_cast<uint8_t>(0xFF >> excess);
  return FromMagnitudeBytes(bytes);
}

BigInt Rng::Below(const BigInt& bound) {
  if (bound <= 0) throw Error(ErrorCode::kValueOutOfRange, "empty range");
  const unsigned bits =
      static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  while (true) {
    BigInt v = Bits(bits);
    if (v < bound) return v;
  }
}

BigInt Rng::InRange(const BigInt& lo, const BigInt& hi) {
  if (hi < lo) throw Error(ErrorCode::kValueOutOfRange, "empty range");
  return lo + Below(hi - lo + 1);
}

BigInt Rng::SignedBits(unsigned bits) {
  const BigInt half = PowerOfTwo(bits);
  return InRange(-half, half);
}

}  // namespace ptincl::crypto
