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

#ifndef PTINCL_PROTOCOLS_CONFIG_HPP_
#define PTINCL_PROTOCOLS_CONFIG_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "ptincl/crypto/commutative.hpp"
#include "ptincl/crypto/paillier.hpp"
#include "ptincl/crypto/rng.hpp"
#include "ptincl/geometry/types.hpp"
#include "ptincl/subprotocols/session.hpp"

namespace ptincl::protocols {

enum class ProtocolId : uint8_t {
  kP41 = 1,
  kP42Faithful = 2,
  kP42Repaired = 3,
  kP51 = 4,
};

// "p41", "p42", "p42r", "p51".
const char* ProtocolName(ProtocolId id);
std::optional<ProtocolId> ParseProtocol(const std::string& name);
bool IsStarProtocol(ProtocolId id);

struct SessionConfig {
  ProtocolId protocol = ProtocolId::kP42Repaired;
  unsigned additive_bits = 512;
  unsigned commutative_bits = crypto::kDefaultCommutativeBits;
  // Seed of the shared commutative prime; part of the public parameters.
  uint64_t public_seed = 0;
  crypto::BigInt plaintext_bound =
      crypto::PowerOfTwo(crypto::kDefaultPlaintextBoundBits);
  subprotocols::BlindingParams blinding;
  double chi_tolerance = geometry::kDefaultChiTolerance;

  // Private per-party randomness.
  crypto::Seed alice_seed;
  crypto::Seed bob_seed;

  // Pre-generated additive keys. When absent, each party generates a fresh
  // key from its own seed.
  std::shared_ptr<const crypto::AdditiveKeyPair> alice_key;
  std::shared_ptr<const crypto::AdditiveKeyPair> bob_key;

  // Splits one master seed into independent party seeds.
  static SessionConfig FromMasterSeed(ProtocolId protocol, uint64_t seed);
  void SetMasterSeed(uint64_t seed);

  // Throws Error(kValidation) for inconsistent parameters.
  void Validate() const;
};

// Digest of every parameter both parties must agree on.
std::array<uint8_t, 32> ParameterHash(const SessionConfig& config);

}  // namespace ptincl::protocols

#endif  // PTINCL_PROTOCOLS_CONFIG_HPP_
