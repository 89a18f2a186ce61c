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

#include "ptincl/subprotocols/blinded_sign.hpp"

#include <string>

#include "ptincl/subprotocols/millionaire.hpp"

namespace ptincl::subprotocols {

std::vector<AdditiveCiphertext> SignQuery(const AdditiveKeyPair& alice,
                                          const BigInt& a, const BigInt& b,
                                          crypto::Rng& rng) {
  return {alice.Encrypt(a, rng), alice.Encrypt(b, rng)};
}

std::vector<AdditiveCiphertext> SignReply(
    const AdditivePublicKey& pk, std::span<const AdditiveCiphertext> query,
    std::span<const LinearForm> forms, std::span<const BigInt> blinds,
    const BlindingParams& params, crypto::Rng& rng) {
  if (query.size() != 2) {
    throw Error(ErrorCode::kLengthMismatch, "sign query needs E(a) and E(b)");
  }
  if (forms.size() != blinds.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "got " + std::to_string(blinds.size()) + " blindings for " +
                    std::to_string(forms.size()) + " forms");
  }
  const BigInt cb = params.coord_bound;
  std::vector<AdditiveCiphertext> out;
  out.reserve(forms.size());
  for (size_t i = 0; i < forms.size(); ++i) {
    const LinearForm& f = forms[i];
    const BigInt& r = blinds[i];
    if (r <= 0) throw Error(ErrorCode::kValidation, "blinding must be positive");
    const BigInt worst = r * (abs(f[0]) * cb + abs(f[1]) * cb + abs(f[2]));
    if (worst > pk.plaintext_bound()) {
      throw Error(ErrorCode::kOverflow,
                  "blinded form value may exceed the plaintext bound");
    }
    AdditiveCiphertext acc = pk.Embed(r * f[2]);
    if (f[0] != 0) acc = pk.Add(acc, pk.ScalarMul(query[0], r * f[0]));
    if (f[1] != 0) acc = pk.Add(acc, pk.ScalarMul(query[1], r * f[1]));
    out.push_back(pk.Rerandomize(acc, rng));
  }
  return out;
}

std::vector<int> SignFinish(const AdditiveKeyPair& alice,
                            std::span<const AdditiveCiphertext> replies,
                            std::vector<BigInt>* blinded) {
  std::vector<int> signs;
  signs.reserve(replies.size());
  if (blinded) blinded->clear();
  for (const auto& c : replies) {
    const BigInt v = alice.Decrypt(c);
    signs.push_back(sgn(v));
    if (blinded) blinded->push_back(v);
  }
  return signs;
}

std::vector<BigInt> RandomBlinds(crypto::Rng& rng, size_t count,
                                 const BigInt& bound) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(RandomBlind(rng, bound));
  return out;
}

std::vector<int> BlindedSignAlice(RoleSession& s, const AdditiveKeyPair& alice,
                                  const BigInt& a, const BigInt& b,
                                  size_t form_count) {
  const AdditivePublicKey& pk = alice.public_key();
  s.SendCiphers(tag::kSignQuery, pk, SignQuery(alice, a, b, s.rng()));
  return SignFinish(alice, s.ExpectCiphers(tag::kSignReply, pk, form_count));
}

void BlindedSignBob(RoleSession& s, const AdditivePublicKey& pk,
                    std::span<const LinearForm> forms,
                    const BlindingParams& params) {
  const auto query = s.ExpectCiphers(tag::kSignQuery, pk, 2);
  const auto blinds = RandomBlinds(s.rng(), forms.size(), params.blind_bound);
  s.SendCiphers(tag::kSignReply, pk,
                SignReply(pk, query, forms, blinds, params, s.rng()));
}

}  // namespace ptincl::subprotocols
