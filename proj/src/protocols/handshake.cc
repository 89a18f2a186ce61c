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

#include "ptincl/protocols/handshake.hpp"

#include <algorithm>

#include "ptincl/error.hpp"
#include "ptincl/transport/wire.hpp"

namespace ptincl::protocols {

namespace tag = subprotocols::tag;

std::vector<uint8_t> EncodeHello(const SessionConfig& config,
                                 uint32_t public_size) {
  transport::Writer w;
  for (uint8_t b : kHelloMagic) w.U8(b);
  w.U8(kWireVersion);
  for (uint8_t b : ParameterHash(config)) w.U8(b);
  w.U32(public_size);
  return w.Take();
}

uint32_t CheckHello(const SessionConfig& config,
                    const transport::Frame& frame) {
  transport::Reader r(frame.payload);
  uint8_t magic[4];
  for (uint8_t& b : magic) b = r.U8();
  if (!std::equal(magic, magic + 4, kHelloMagic)) {
    throw Error(ErrorCode::kHandshakeMismatch, "peer is not a ptincl endpoint");
  }
  const uint8_t version = r.U8();
  if (version != kWireVersion) {
    throw Error(ErrorCode::kHandshakeMismatch,
                "wire version mismatch: peer speaks " + std::to_string(version));
  }
  std::array<uint8_t, 32> hash{};
  for (uint8_t& b : hash) b = r.U8();
  const uint32_t size = r.U32();
  r.End();
  if (hash != ParameterHash(config)) {
    throw Error(ErrorCode::kHandshakeMismatch,
                "parameter mismatch (protocol, key sizes or bounds differ)");
  }
  return size;
}

uint32_t HandshakeAlice(subprotocols::RoleSession& s,
                        const SessionConfig& config) {
  s.Send(tag::kHello, EncodeHello(config, 0));
  const uint32_t n = CheckHello(config, s.Expect(tag::kHello));
  if (n < 3) {
    throw Error(ErrorCode::kProtocol, "peer announced fewer than 3 vertices");
  }
  return n;
}

void HandshakeBob(subprotocols::RoleSession& s, const SessionConfig& config,
                  uint32_t vertex_count) {
  CheckHello(config, s.Expect(tag::kHello));
  s.Send(tag::kHello, EncodeHello(config, vertex_count));
}

}  // namespace ptincl::protocols
