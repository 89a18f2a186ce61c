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

#include "ptincl/subprotocols/scalar_product.hpp"

#include <string>

namespace ptincl::subprotocols {

std::vector<AdditiveCiphertext> SpRequest(const AdditiveKeyPair& alice,
                                          std::span<const BigInt> x,
                                          crypto::Rng& rng) {
  std::vector<AdditiveCiphertext> out;
  out.reserve(x.size());
  for (const BigInt& xi : x) out.push_back(alice.Encrypt(xi, rng));
  return out;
}

AdditiveCiphertext SpReply(const AdditivePublicKey& pk,
                           std::span<const AdditiveCiphertext> request,
                           std::span<const BigInt> y, const BigInt& v,
                           const BigInt& x_bound, crypto::Rng& rng) {
  if (request.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "scalar product lengths differ: " +
                    std::to_string(request.size()) + " vs " +
                    std::to_string(y.size()));
  }
  BigInt worst = abs(v);
  for (const BigInt& yi : y) worst += abs(yi) * x_bound;
  if (worst > pk.plaintext_bound()) {
    throw Error(ErrorCode::kOverflow,
                "scalar product may exceed the plaintext bound");
  }
  AdditiveCiphertext acc = pk.Encrypt(v, rng);
  for (size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    acc = pk.Add(acc, pk.ScalarMul(request[i], y[i]));
  }
  return acc;
}

BigInt SpFinish(const AdditiveKeyPair& alice, const AdditiveCiphertext& reply) {
  return alice.Decrypt(reply);
}

BigInt ScalarProductAlice(RoleSession& s, const AdditiveKeyPair& alice,
                          std::span<const BigInt> x) {
  const AdditivePublicKey& pk = alice.public_key();
  s.SendCiphers(tag::kSpRequest, pk, SpRequest(alice, x, s.rng()));
  return SpFinish(alice, s.ExpectCiphers(tag::kSpReply, pk, 1)[0]);
}

void ScalarProductBob(RoleSession& s, const AdditivePublicKey& pk,
                      std::span<const BigInt> y, const BigInt& v,
                      const BigInt& x_bound) {
  const auto request = s.ExpectCiphers(tag::kSpRequest, pk, y.size());
  const AdditiveCiphertext reply = SpReply(pk, request, y, v, x_bound, s.rng());
  s.SendCiphers(tag::kSpReply, pk, std::span(&reply, 1));
}

}  // namespace ptincl::subprotocols
