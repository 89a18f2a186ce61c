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

#ifndef PTINCL_SUBPROTOCOLS_SCALAR_PRODUCT_HPP_
#define PTINCL_SUBPROTOCOLS_SCALAR_PRODUCT_HPP_

#include <span>
#include <vector>

#include "ptincl/subprotocols/session.hpp"

namespace ptincl::subprotocols {

// Alice holds X, Bob holds Y and a mask V. Alice learns X.Y + V; Bob sees
// only encryptions under Alice's key.

std::vector<AdditiveCiphertext> SpRequest(const AdditiveKeyPair& alice,
                                          std::span<const BigInt> x,
                                          crypto::Rng& rng);

// `x_bound` bounds every |x_i|. Throws Error(kLengthMismatch) for unequal
// lengths and Error(kOverflow) when |X.Y + V| could exceed the plaintext
// bound.
AdditiveCiphertext SpReply(const AdditivePublicKey& pk,
                           std::span<const AdditiveCiphertext> request,
                           std::span<const BigInt> y, const BigInt& v,
                           const BigInt& x_bound, crypto::Rng& rng);

BigInt SpFinish(const AdditiveKeyPair& alice, const AdditiveCiphertext& reply);

// Two messages: SP_REQUEST then SP_REPLY.
BigInt ScalarProductAlice(RoleSession& s, const AdditiveKeyPair& alice,
                          std::span<const BigInt> x);
void ScalarProductBob(RoleSession& s, const AdditivePublicKey& pk,
                      std::span<const BigInt> y, const BigInt& v,
                      const BigInt& x_bound);

}  // namespace ptincl::subprotocols

#endif  // PTINCL_SUBPROTOCOLS_SCALAR_PRODUCT_HPP_
