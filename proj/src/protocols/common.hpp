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

#ifndef PTINCL_SRC_PROTOCOLS_COMMON_HPP_
#define PTINCL_SRC_PROTOCOLS_COMMON_HPP_

#include <vector>

#include "ptincl/error.hpp"
#include "ptincl/geometry/types.hpp"
#include "ptincl/protocols/config.hpp"
#include "ptincl/subprotocols/blinded_sign.hpp"
#include "ptincl/subprotocols/session.hpp"
#include "ptincl/transport/wire.hpp"

namespace ptincl::protocols::internal {

using crypto::BigInt;
using subprotocols::LinearForm;
using subprotocols::RoleSession;
namespace tag = subprotocols::tag;

inline LinearForm ToForm(const geometry::Triple& t) {
  return {crypto::FromInt64(t[0]), crypto::FromInt64(t[1]),
          crypto::FromInt64(t[2])};
}

inline std::vector<LinearForm> ToForms(const std::vector<geometry::Triple>& t) {
  std::vector<LinearForm> out;
  out.reserve(t.size());
  for (const auto& x : t) out.push_back(ToForm(x));
  return out;
}

inline void SendResult(RoleSession& s, bool inside) {
  transport::Writer w;
  w.U8(inside ? 1 : 0);
  s.Send(tag::kResult, w.Take());
}

inline bool ExpectResult(RoleSession& s) {
  const transport::Frame f = s.Expect(tag::kResult);
  transport::Reader r(f.payload);
  const uint8_t v = r.U8();
  r.End();
  if (v > 1) throw Error(ErrorCode::kProtocol, "malformed result frame");
  return v == 1;
}

inline std::vector<uint8_t> KeyPayload(const crypto::AdditivePublicKey& pk) {
  transport::Writer w;
  subprotocols::WritePublicKey(w, pk);
  return w.Take();
}

// Reads a KEY frame and checks it against the agreed parameters.
inline crypto::AdditivePublicKey ExpectKey(RoleSession& s,
                                           const SessionConfig& c) {
  const transport::Frame f = s.Expect(tag::kKey);
  transport::Reader r(f.payload);
  crypto::AdditivePublicKey pk =
      subprotocols::ReadPublicKey(r, c.additive_bits);
  r.End();
  if (pk.bits() != c.additive_bits || pk.plaintext_bound() != c.plaintext_bound) {
    throw Error(ErrorCode::kHandshakeMismatch,
                "peer key does not match the agreed parameters");
  }
  return pk;
}

inline geometry::Location LocationOfSign(int sign) {
  if (sign > 0) return geometry::Location::kInside;
  if (sign == 0) return geometry::Location::kBoundary;
  return geometry::Location::kOutside;
}

}  // namespace ptincl::protocols::internal

#endif  // PTINCL_SRC_PROTOCOLS_COMMON_HPP_
