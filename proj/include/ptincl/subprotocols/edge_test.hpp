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

#ifndef PTINCL_SUBPROTOCOLS_EDGE_TEST_HPP_
#define PTINCL_SUBPROTOCOLS_EDGE_TEST_HPP_

#include <span>
#include <vector>

#include "ptincl/subprotocols/blinded_sign.hpp"
#include "ptincl/subprotocols/session.hpp"

namespace ptincl::subprotocols {

// Oblivious evaluation of one of Bob's forms at Alice's point. Alice holds
// an index j and (a, b); Bob holds forms F_0..F_{n-1}. Alice learns
// sign(F_j(a, b)); Bob learns neither j nor (a, b).
//
// Messages, six in four rounds:
//   A->B EDGE_SELECT  E(e_i), e the 0/1 indicator of j
//   A->B SP_REQUEST   E(a), E(b), E(1)
//   B->A EDGE_MASKED  E(F_j + m) coefficientwise, m a fresh mask triple
//   B->A SP_REPLY     E((a, b, 1).m + V)
//   A->B MILL_REQUEST E(x) with x = (a, b, 1).(F_j + m) - SP = F_j(a, b) - V
//   B->A MILL_REPLY   E(rho * (x + V))

struct EdgeTrace {
  LinearForm masked_form;
  BigInt masked_product;
  BigInt difference;
  BigInt blinded;
};

std::vector<AdditiveCiphertext> EdgeSelect(const AdditiveKeyPair& alice,
                                           size_t n, size_t j,
                                           crypto::Rng& rng);

// Throws Error(kLengthMismatch) when the selection and form counts differ.
std::vector<AdditiveCiphertext> EdgeMask(
    const AdditivePublicKey& pk, std::span<const AdditiveCiphertext> selection,
    std::span<const LinearForm> forms, const LinearForm& mask,
    crypto::Rng& rng);

int EdgeTestAlice(RoleSession& s, const AdditiveKeyPair& alice, size_t n,
                  size_t j, const BigInt& a, const BigInt& b,
                  const BlindingParams& params, EdgeTrace* trace = nullptr);
void EdgeTestBob(RoleSession& s, const AdditivePublicKey& pk,
                 std::span<const LinearForm> forms,
                 const BlindingParams& params);

}  // namespace ptincl::subprotocols

#endif  // PTINCL_SUBPROTOCOLS_EDGE_TEST_HPP_
