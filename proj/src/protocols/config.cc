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

#include "ptincl/protocols/config.hpp"

#include <sodium.h>

#include <sstream>

#include "ptincl/error.hpp"

namespace ptincl::protocols {

const char* ProtocolName(ProtocolId id) {
  switch (id) {
    case ProtocolId::kP41: return "p41";
    case ProtocolId::kP42Faithful: return "p42";
    case ProtocolId::kP42Repaired: return "p42r";
    case ProtocolId::kP51: return "p51";
  }
  return "unknown";
}

std::optional<ProtocolId> ParseProtocol(const std::string& name) {
  if (name == "p41") return ProtocolId::kP41;
  if (name == "p42") return ProtocolId::kP42Faithful;
  if (name == "p42r") return ProtocolId::kP42Repaired;
  if (name == "p51") return ProtocolId::kP51;
  return std::nullopt;
}

bool IsStarProtocol(ProtocolId id) { return id != ProtocolId::kP51; }

SessionConfig SessionConfig::FromMasterSeed(ProtocolId protocol,
                                            uint64_t seed) {
  SessionConfig c;
  c.protocol = protocol;
  c.SetMasterSeed(seed);
  return c;
}

void SessionConfig::SetMasterSeed(uint64_t seed) {
  const crypto::Seed master = crypto::Seed::FromU64(seed);
  alice_seed = master.Derive("alice");
  bob_seed = master.Derive("bob");
}

void SessionConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kValidation, what);
  };
  if (additive_bits < 256 || additive_bits % 2 != 0) {
    fail("additive key size must be an even number >= 256");
  }
  if (plaintext_bound <= 0 ||
      plaintext_bound >= crypto::PowerOfTwo(additive_bits - 2)) {
    fail("plaintext bound must be below N/2");
  }
  if (blinding.coord_bound <= 0 || blinding.coord_bound > (int64_t{1} << 28)) {
    fail("coordinate bound must be in [1, 2^28]");
  }
  if (blinding.blind_bound < 1) fail("blinding bound must be positive");
  if (blinding.cmp_bound <= 0) fail("comparison bound must be positive");
  if (!(chi_tolerance > 0 && chi_tolerance < 0.25)) {
    fail("tolerance must be in (0, 0.25)");
  }
  if (protocol == ProtocolId::kP42Faithful) {
    // Blinded components r * c with |c| < 8 * coord_bound^2 must decode.
    const crypto::BigInt cb = blinding.coord_bound;
    const crypto::BigInt worst = blinding.blind_bound * 8 * cb * cb;
    if (2 * worst >= crypto::PowerOfTwo(commutative_bits - 1)) {
      fail("commutative modulus too small for the blinding bound");
    }
  }
  if (protocol == ProtocolId::kP41) {
    const crypto::BigInt mask = crypto::PowerOfTwo(blinding.mask_bits);
    if (2 * mask > blinding.cmp_bound) {
      fail("mask size exceeds the comparison bound");
    }
  }
}

std::array<uint8_t, 32> ParameterHash(const SessionConfig& c) {
  std::ostringstream s;
  s << "ptincl/params/v1"
    << ";protocol=" << ProtocolName(c.protocol)
    << ";additive_bits=" << c.additive_bits
    << ";commutative_bits=" << c.commutative_bits
    << ";public_seed=" << c.public_seed
    << ";plaintext_bound=" << c.plaintext_bound.get_str(16)
    << ";coord_bound=" << c.blinding.coord_bound
    << ";cmp_bound=" << c.blinding.cmp_bound.get_str(16)
    << ";blind_bound=" << c.blinding.blind_bound.get_str(16)
    << ";mask_bits=" << c.blinding.mask_bits
    << ";coeff_mask_bits=" << c.blinding.coeff_mask_bits
    << ";chi_tolerance=" << c.chi_tolerance;
  const std::string text = s.str();
  crypto::EnsureSodium();
  std::array<uint8_t, 32> out{};
  crypto_generichash(out.data(), out.size(),
                     reinterpret_cast<const uint8_t*>(text.data()), text.size(),
                     nullptr, 0);
  return out;
}

}  // namespace ptincl::protocols
