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

#include "ptincl/subprotocols/millionaire.hpp"

namespace ptincl::subprotocols {

BigInt RandomBlind(crypto::Rng& rng, const BigInt& bound) {
  return rng.InRange(1, bound);
}

AdditiveCiphertext MillRequest(const AdditiveKeyPair& alice, const BigInt& x,
                               const BlindingParams& params, crypto::Rng& rng) {
  if (abs(x) > params.cmp_bound) {
    throw Error(ErrorCode::kBoundViolation,
                "comparison input exceeds the comparison bound");
  }
  return alice.Encrypt(x, rng);
}

AdditiveCiphertext MillReply(const AdditivePublicKey& pk,
                             const AdditiveCiphertext& request, const BigInt& y,
                             const BlindingParams& params, crypto::Rng& rng) {
  if (abs(y) > params.cmp_bound) {
    throw Error(ErrorCode::kBoundViolation,
                "comparison input exceeds the comparison bound");
  }
  if (2 * params.cmp_bound * params.blind_bound >= pk.n() / 2) {
    throw Error(ErrorCode::kOverflow,
                "blinded comparison exceeds the decryptable range");
  }
  const BigInt rho = RandomBlind(rng, params.blind_bound);
  const AdditiveCiphertext diff = pk.Add(request, pk.Embed(-y));
  return pk.Rerandomize(pk.ScalarMul(diff, rho), rng);
}

int MillFinish(const AdditiveKeyPair& alice, const AdditiveCiphertext& reply,
               BigInt* blinded) {
  const BigInt v = alice.Decrypt(reply);
  if (blinded) *blinded = v;
  return sgn(v);
}

int MillionaireAlice(RoleSession& s, const AdditiveKeyPair& alice,
                     const BigInt& x, const BlindingParams& params) {
  const AdditivePublicKey& pk = alice.public_key();
  const AdditiveCiphertext req = MillRequest(alice, x, params, s.rng());
  s.SendCiphers(tag::kMillRequest, pk, std::span(&req, 1));
  return MillFinish(alice, s.ExpectCiphers(tag::kMillReply, pk, 1)[0]);
}

void MillionaireBob(RoleSession& s, const AdditivePublicKey& pk,
                    const BigInt& y, const BlindingParams& params) {
  const auto req = s.ExpectCiphers(tag::kMillRequest, pk, 1);
  const AdditiveCiphertext reply = MillReply(pk, req[0], y, params, s.rng());
  s.SendCiphers(tag::kMillReply, pk, std::span(&reply, 1));
}

}  // namespace ptincl::subprotocols
