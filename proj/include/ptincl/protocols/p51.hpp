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

#ifndef PTINCL_PROTOCOLS_P51_HPP_
#define PTINCL_PROTOCOLS_P51_HPP_

#include <cstddef>
#include <vector>

#include "ptincl/crypto/paillier.hpp"
#include "ptincl/geometry/types.hpp"
#include "ptincl/protocols/config.hpp"
#include "ptincl/subprotocols/blinded_sign.hpp"
#include "ptincl/subprotocols/session.hpp"

namespace ptincl::protocols {

// Four forms per vertex, in vertex order: two wedge tests of two forms
// each. A point is in wedge w of vertex i iff form 4i+2w is positive and
// form 4i+2w+1 is negative; the two wedges are the inner ones.
std::vector<subprotocols::LinearForm> InnerWedgeForms(
    const geometry::GeneralPolygon& poly);

// 1 when the signs put the point in an inner wedge of the vertex, else 0.
// Throws Error(kOnRay) for a zero sign.
std::vector<int> InnerIndicators(const std::vector<int>& signs);

struct P51AliceState {
  std::vector<int> signs;
  // 2 * u_i.
  std::vector<int> inner;
  bool inside = false;
};

struct P51BobState {
  // Convexity weights v_i: +1 convex, -1 concave.
  std::vector<int> weights;
  // Sum of -theta_i / 2pi over convex vertices and 1 - theta_i / 2pi over
  // concave ones.
  double theta_sum = 0.0;
  // U.V, twice scaled as received.
  crypto::BigInt uv2;
  double chi = 0.0;
  bool inside = false;
};

P51AliceState RunP51Alice(subprotocols::RoleSession& s,
                          const SessionConfig& config,
                          const crypto::AdditiveKeyPair& key, geometry::Point m,
                          size_t n);
P51BobState RunP51Bob(subprotocols::RoleSession& s,
                      const SessionConfig& config,
                      const crypto::AdditiveKeyPair& key,
                      const geometry::GeneralPolygon& poly);

}  // namespace ptincl::protocols

#endif  // PTINCL_PROTOCOLS_P51_HPP_
