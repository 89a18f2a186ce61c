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

#ifndef PTINCL_PROTOCOLS_P41_HPP_
#define PTINCL_PROTOCOLS_P41_HPP_

#include <cstddef>
#include <vector>

#include "ptincl/crypto/paillier.hpp"
#include "ptincl/geometry/types.hpp"
#include "ptincl/protocols/config.hpp"
#include "ptincl/subprotocols/session.hpp"

namespace ptincl::protocols {

// Linear protocol: for every vertex one masked scalar product for the ray
// form and one for the edge form, each followed by a comparison against
// Bob's mask.

struct P41AliceState {
  // U_i = A.B_i + V_i and Z_i = A.C_i + W_i.
  std::vector<crypto::BigInt> u;
  std::vector<crypto::BigInt> z;
  std::vector<int> ray_signs;
  std::vector<int> edge_signs;
  size_t wedge = 0;
  geometry::Location location = geometry::Location::kOutside;
};

struct P41BobState {
  std::vector<crypto::BigInt> v;
  std::vector<crypto::BigInt> w;
  bool inside = false;
};

P41AliceState RunP41Alice(subprotocols::RoleSession& s,
                          const SessionConfig& config,
                          const crypto::AdditiveKeyPair& key, geometry::Point m,
                          size_t n);
P41BobState RunP41Bob(subprotocols::RoleSession& s,
                      const SessionConfig& config,
                      const geometry::StarPolygon& star);

}  // namespace ptincl::protocols

#endif  // PTINCL_PROTOCOLS_P41_HPP_
