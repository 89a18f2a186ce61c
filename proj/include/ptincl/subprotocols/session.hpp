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

#ifndef PTINCL_SUBPROTOCOLS_SESSION_HPP_
#define PTINCL_SUBPROTOCOLS_SESSION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ptincl/crypto/paillier.hpp"
#include "ptincl/crypto/rng.hpp"
#include "ptincl/error.hpp"
#include "ptincl/transport/channel.hpp"
#include "ptincl/transport/wire.hpp"

namespace ptincl::subprotocols {

enum class Role { kAlice, kBob };

const char* RoleName(Role role);

// Message type tags.
namespace tag {
inline constexpr uint8_t kHello = transport::kTagHello;
inline constexpr uint8_t kAbort = 0x02;
inline constexpr uint8_t kResult = 0x03;
inline constexpr uint8_t kSpRequest = 0x10;
inline constexpr uint8_t kSpReply = 0x11;
inline constexpr uint8_t kMillRequest = 0x20;
inline constexpr uint8_t kMillReply = 0x21;
inline constexpr uint8_t kSignQuery = 0x30;
inline constexpr uint8_t kSignReply = 0x31;
inline constexpr uint8_t kEdgeSelect = 0x40;
inline constexpr uint8_t kEdgeMasked = 0x41;
inline constexpr uint8_t kLayered = 0x50;
inline constexpr uint8_t kRelayered = 0x51;
inline constexpr uint8_t kBlind = 0x52;
inline constexpr uint8_t kProbe = 0x53;
inline constexpr uint8_t kProbeReply = 0x54;
inline constexpr uint8_t kKey = 0x60;
}  // namespace tag

const char* TagName(uint8_t t);

using crypto::AdditiveCiphertext;
using crypto::AdditiveKeyPair;
using crypto::AdditivePublicKey;
using crypto::BigInt;

// Blinding and masking magnitudes shared by the building blocks.
struct BlindingParams {
  // Largest |coordinate| of Alice's point.
  int64_t coord_bound = 1 << 20;
  // Inputs to a comparison must satisfy |x|, |y| <= cmp_bound.
  BigInt cmp_bound = crypto::PowerOfTwo(100);
  // Positive multiplicative blindings are drawn from [1, blind_bound].
  BigInt blind_bound = crypto::PowerOfTwo(40);
  // Additive masks are drawn from [-2^mask_bits, 2^mask_bits].
  unsigned mask_bits = 90;
  // Masks on edge-form coefficients.
  unsigned coeff_mask_bits = 60;
};

// One party's view of a session: its role, the channel to the peer and its
// own randomness. Not shareable between execution contexts.
class RoleSession {
 public:
  RoleSession(Role role, transport::Channel& channel, crypto::Rng& rng)
      : role_(role), channel_(channel), rng_(rng) {}

  Role role() const { return role_; }
  transport::Channel& channel() { return channel_; }
  crypto::Rng& rng() { return rng_; }

  void Send(uint8_t t, std::vector<uint8_t> payload);
  // Next frame from the peer. An abort frame becomes an Error with
  // from_peer set; any other unexpected tag is Error(kProtocol).
  transport::Frame Expect(uint8_t t);

  void SendCiphers(uint8_t t, const AdditivePublicKey& pk,
                   std::span<const AdditiveCiphertext> ciphers);
  // Throws Error(kProtocol) when the count differs from `expected`.
  std::vector<AdditiveCiphertext> ExpectCiphers(uint8_t t,
                                                const AdditivePublicKey& pk,
                                                size_t expected);

  // Best effort; never throws.
  void SendAbort(const Error& error) noexcept;

 private:
  Role role_;
  transport::Channel& channel_;
  crypto::Rng& rng_;
};

// Fixed-width ciphertext codec: every ciphertext under one key has the same
// encoded size.
void WriteCipher(transport::Writer& w, const AdditivePublicKey& pk,
                 const AdditiveCiphertext& c);
AdditiveCiphertext ReadCipher(transport::Reader& r,
                              const AdditivePublicKey& pk);
std::vector<uint8_t> EncodeCiphers(const AdditivePublicKey& pk,
                                   std::span<const AdditiveCiphertext> c);
std::vector<AdditiveCiphertext> DecodeCiphers(const AdditivePublicKey& pk,
                                              std::span<const uint8_t> bytes);

void WritePublicKey(transport::Writer& w, const AdditivePublicKey& pk);
// Rejects keys below `min_bits` with Error(kHandshakeMismatch).
AdditivePublicKey ReadPublicKey(transport::Reader& r, unsigned min_bits);

transport::Frame AbortFrame(ErrorCode code, const std::string& message);
Error DecodeAbort(const transport::Frame& frame);

}  // namespace ptincl::subprotocols

#endif  // PTINCL_SUBPROTOCOLS_SESSION_HPP_
