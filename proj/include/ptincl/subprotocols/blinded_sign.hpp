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

#ifndef PTINCL_SUBPROTOCOLS_BLINDED_SIGN_HPP_
#define PTINCL_SUBPROTOCOLS_BLINDED_SIGN_HPP_

#include <array>
#include <span>
#include <vector>

#include "ptincl/subprotocols/session.hpp"

namespace ptincl::subprotocols {

// Linear form (alpha, beta, gamma) evaluated at (a, b, 1).
using LinearForm = std::array<BigInt, 3>;

// Alice sends E(a), E(b) once; Bob answers any number of forms with
// E(r_i * (alpha_i a + beta_i b + gamma_i)) for positive blindings r_i.

std::vector<AdditiveCiphertext> SignQuery(const AdditiveKeyPair& alice,
                                          const BigInt& a, const BigInt& b,
                                          crypto::Rng& rng);

// `query` holds E(a), E(b). Throws Error(kLengthMismatch) when the blinding
// count differs from the form count and Error(kOverflow) when a blinded
// value could exceed the plaintext bound.
std::vector<AdditiveCiphertext> SignReply(
    const AdditivePublicKey& pk, std::span<const AdditiveCiphertext> query,
    std::span<const LinearForm> forms, std::span<const BigInt> blinds,
    const BlindingParams& params, crypto::Rng& rng);

// Signs of the decrypted replies; `blinded` receives the values.
std::vector<int> SignFinish(const AdditiveKeyPair& alice,
                            std::span<const AdditiveCiphertext> replies,
                            std::vector<BigInt>* blinded = nullptr);

std::vector<BigInt> RandomBlinds(crypto::Rng& rng, size_t count,
                                 const BigInt& bound);

// Two messages regardless of the batch size: SIGN_QUERY then SIGN_REPLY.
std::vector<int> BlindedSignAlice(RoleSession& s, const AdditiveKeyPair& alice,
                                  const BigInt& a, const BigInt& b,
                                  size_t form_count);
void BlindedSignBob(RoleSession& s, const AdditivePublicKey& pk,
                    std::span<const LinearForm> forms,
                    const BlindingParams& params);

}  // namespace ptincl::subprotocols

#endif  // PTINCL_SUBPROTOCOLS_BLINDED_SIGN_HPP_
