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

#ifndef PTINCL_PROTOCOLS_HANDSHAKE_HPP_
#define PTINCL_PROTOCOLS_HANDSHAKE_HPP_

#include <cstdint>

#include "ptincl/protocols/config.hpp"
#include "ptincl/subprotocols/session.hpp"

namespace ptincl::protocols {

inline constexpr uint8_t kHelloMagic[4] = {'P', 'T', 'I', 'N'};
inline constexpr uint8_t kWireVersion = 1;

// HELLO payload: magic, version, parameter hash, public size. Bob's public
// size is his vertex count; Alice sends 0.
std::vector<uint8_t> EncodeHello(const SessionConfig& config,
                                 uint32_t public_size);

// Returns the peer's public size. Throws Error(kHandshakeMismatch) if magic,
// version or parameter hash differ.
uint32_t CheckHello(const SessionConfig& config,
                    const transport::Frame& frame);

// Alice sends first and returns Bob's vertex count.
uint32_t HandshakeAlice(subprotocols::RoleSession& s,
                        const SessionConfig& config);
// Bob answers only after checking Alice's hello.
void HandshakeBob(subprotocols::RoleSession& s, const SessionConfig& config,
                  uint32_t vertex_count);

}  // namespace ptincl::protocols

#endif  // PTINCL_PROTOCOLS_HANDSHAKE_HPP_
