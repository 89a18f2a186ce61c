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

#include "ptincl/subprotocols/session.hpp"

#include <string>

namespace ptincl::subprotocols {

const char* RoleName(Role role) {
  return role == Role::kAlice ? "alice" : "bob";
}

const char* TagName(uint8_t t) {
  switch (t) {
    case tag::kHello: return "HELLO";
    case tag::kAbort: return "ABORT";
    case tag::kResult: return "RESULT";
    case tag::kSpRequest: return "SP_REQUEST";
    case tag::kSpReply: return "SP_REPLY";
    case tag::kMillRequest: return "MILL_REQUEST";
    case tag::kMillReply: return "MILL_REPLY";
    case tag::kSignQuery: return "SIGN_QUERY";
    case tag::kSignReply: return "SIGN_REPLY";
    case tag::kEdgeSelect: return "EDGE_SELECT";
    case tag::kEdgeMasked: return "EDGE_MASKED";
    case tag::kLayered: return "LAYERED";
    case tag::kRelayered: return "RELAYERED";
    case tag::kBlind: return "BLIND";
    case tag::kProbe: return "PROBE";
    case tag::kProbeReply: return "PROBE_REPLY";
    case tag::kKey: return "KEY";
  }
  return "UNKNOWN";
}

void RoleSession::Send(uint8_t t, std::vector<uint8_t> payload) {
  channel_.Send(transport::Frame{t, std::move(payload)});
}

transport::Frame RoleSession::Expect(uint8_t t) {
  transport::Frame f = channel_.Receive();
  if (f.tag == t) return f;
  if (f.tag == tag::kAbort) throw DecodeAbort(f);
  throw Error(ErrorCode::kProtocol, std::string("expected ") + TagName(t) +
                                        " frame, got " + TagName(f.tag));
}

void RoleSession::SendCiphers(uint8_t t, const AdditivePublicKey& pk,
                              std::span<const AdditiveCiphertext> ciphers) {
  Send(t, EncodeCiphers(pk, ciphers));
}

std::vector<AdditiveCiphertext> RoleSession::ExpectCiphers(
    uint8_t t, const AdditivePublicKey& pk, size_t expected) {
  const transport::Frame f = Expect(t);
  std::vector<AdditiveCiphertext> out = DecodeCiphers(pk, f.payload);
  if (out.size() != expected) {
    throw Error(ErrorCode::kProtocol,
                std::string(TagName(t)) + " carries " +
                    std::to_string(out.size()) + " ciphertexts, expected " +
                    std::to_string(expected));
  }
  return out;
}

void RoleSession::SendAbort(const Error& error) noexcept {
  try {
    channel_.Send(AbortFrame(error.code(), error.what()));
  } catch (...) {
  }
}

void WriteCipher(transport::Writer& w, const AdditivePublicKey& pk,
                 const AdditiveCiphertext& c) {
  if (c.key_fingerprint != pk.fingerprint()) {
    throw Error(ErrorCode::kKeyMismatch, "ciphertext of a different key");
  }
  w.Int(c.value, pk.ciphertext_width());
}

AdditiveCiphertext ReadCipher(transport::Reader& r,
                              const AdditivePublicKey& pk) {
  const BigInt v = r.Int();
  try {
    return pk.Import(v);
  } catch (const Error& e) {
    throw Error(ErrorCode::kFrameDecode, e.what());
  }
}

std::vector<uint8_t> EncodeCiphers(const AdditivePublicKey& pk,
                                   std::span<const AdditiveCiphertext> c) {
  transport::Writer w;
  w.U32(static_cast<uint32_t>(c.size()));
  for (const auto& x : c) WriteCipher(w, pk, x);
  return w.Take();
}

std::vector<AdditiveCiphertext> DecodeCiphers(const AdditivePublicKey& pk,
                                              std::span<const uint8_t> bytes) {
  transport::Reader r(bytes);
  const uint32_t count = r.U32();
  if (count > bytes.size() / 5) {
    throw Error(ErrorCode::kFrameDecode, "ciphertext count out of range");
  }
  std::vector<AdditiveCiphertext> out;
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i) out.push_back(ReadCipher(r, pk));
  r.End();
  return out;
}

void WritePublicKey(transport::Writer& w, const AdditivePublicKey& pk) {
  w.Int(pk.n());
  w.Int(pk.plaintext_bound());
}

AdditivePublicKey ReadPublicKey(transport::Reader& r, unsigned min_bits) {
  BigInt n = r.Int();
  BigInt bound = r.Int();
  if (n <= 0 || bound <= 0 || 2 * bound >= n) {
    throw Error(ErrorCode::kFrameDecode, "malformed public key");
  }
  AdditivePublicKey pk(std::move(n), std::move(bound));
  if (pk.bits() < min_bits) {
    throw Error(ErrorCode::kHandshakeMismatch,
                "peer key has " + std::to_string(pk.bits()) +
                    " bits, expected at least " + std::to_string(min_bits));
  }
  return pk;
}

transport::Frame AbortFrame(ErrorCode code, const std::string& message) {
  transport::Writer w;
  w.U8(static_cast<uint8_t>(code));
  w.String(message);
  return transport::Frame{tag::kAbort, w.Take()};
}

Error DecodeAbort(const transport::Frame& frame) {
  try {
    transport::Reader r(frame.payload);
    const uint8_t code = r.U8();
    const std::string msg = r.String();
    if (code > static_cast<uint8_t>(ErrorCode::kEntropy)) {
      return Error(ErrorCode::kProtocol, "peer aborted: " + msg, true);
    }
    return Error(static_cast<ErrorCode>(code), "peer aborted: " + msg, true);
  } catch (const Error&) {
    return Error(ErrorCode::kProtocol, "peer aborted", true);
  }
}

}  // namespace ptincl::subprotocols
