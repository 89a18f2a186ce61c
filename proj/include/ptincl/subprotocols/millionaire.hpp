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

#ifndef PTINCL_SUBPROTOCOLS_MILLIONAIRE_HPP_
#define PTINCL_SUBPROTOCOLS_MILLIONAIRE_HPP_

#include "ptincl/subprotocols/session.hpp"

namespace ptincl::subprotocols {

// Alice holds x, Bob holds y. Alice learns sign(x - y) together with the
// blinded magnitude rho * |x - y|, rho uniform in [1, blind_bound].

// Throws Error(kBoundViolation) when |x| > cmp_bound.
AdditiveCiphertext MillRequest(const AdditiveKeyPair& alice, const BigInt& x,
                               const BlindingParams& params, crypto::Rng& rng);

// Returns E(rho * (x - y)). Throws Error(kBoundViolation) when |y| >
// cmp_bound and Error(kOverflow) when the blinded difference could leave the
// decryptable range.
AdditiveCiphertext MillReply(const AdditivePublicKey& pk,
                             const AdditiveCiphertext& request, const BigInt& y,
                             const BlindingParams& params, crypto::Rng& rng);

// Sign of the decrypted value; `blinded` receives the value itself.
int MillFinish(const AdditiveKeyPair& alice, const AdditiveCiphertext& reply,
               BigInt* blinded = nullptr);

// Two messages: MILL_REQUEST then MILL_REPLY.
int MillionaireAlice(RoleSession& s, const AdditiveKeyPair& alice,
                     const BigInt& x, const BlindingParams& params);
void MillionaireBob(RoleSession& s, const AdditivePublicKey& pk,
                    const BigInt& y, const BlindingParams& params);

// Uniform in [1, bound].
BigInt RandomBlind(crypto::Rng& rng, const BigInt& bound);

}  // namespace ptincl::subprotocols

#endif  // PTINCL_SUBPROTOCOLS_MILLIONAIRE_HPP_
