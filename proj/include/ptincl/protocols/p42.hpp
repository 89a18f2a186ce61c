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

#ifndef PTINCL_PROTOCOLS_P42_HPP_
#define PTINCL_PROTOCOLS_P42_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ptincl/crypto/paillier.hpp"
#include "ptincl/geometry/types.hpp"
#include "ptincl/protocols/config.hpp"
#include "ptincl/subprotocols/edge_test.hpp"
#include "ptincl/subprotocols/session.hpp"

namespace ptincl::protocols {

// Probes that search for the wedge: one reference probe plus one per
// halving step. The binary search never needs more; shorter searches are
// padded so the count depends on n only.
size_t FaithfulRayProbes(size_t n);

struct P42Probe {
  // 0 for the ray list, 1 for the edge list.
  uint8_t list = 0;
  uint32_t rotated_index = 0;
  // Alice only: the probe was padding and its answer was discarded.
  bool dummy = false;
};

struct P42FaithfulAliceState {
  size_t rotation = 0;
  // Rotated index of the angular reference ray.
  size_t reference = 0;
  std::vector<P42Probe> probes;
  size_t wedge_rotated = 0;
  // Wedge index in Bob's original order.
  size_t wedge = 0;
  // Decoded r * B and r * C triples, one per probe.
  std::vector<std::array<crypto::BigInt, 3>> blinded;
  crypto::BigInt edge_value;
  geometry::Location location = geometry::Location::kOutside;
  // Layered elements equal to 0 or +-1, which layers do not hide.
  size_t exposed_components = 0;
};

struct P42FaithfulBobState {
  std::vector<P42Probe> probes;
  size_t exposed_components = 0;
  bool inside = false;
};

P42FaithfulAliceState RunP42FaithfulAlice(subprotocols::RoleSession& s,
                                          const SessionConfig& config,
                                          geometry::Point m, size_t n);
P42FaithfulBobState RunP42FaithfulBob(subprotocols::RoleSession& s,
                                      const SessionConfig& config,
                                      const geometry::StarPolygon& star);

struct P42RepairedAliceState {
  std::vector<int> ray_signs;
  size_t wedge = 0;
  subprotocols::EdgeTrace edge;
  geometry::Location location = geometry::Location::kOutside;
};

struct P42RepairedBobState {
  bool inside = false;
};

P42RepairedAliceState RunP42RepairedAlice(subprotocols::RoleSession& s,
                                          const SessionConfig& config,
                                          const crypto::AdditiveKeyPair& key,
                                          geometry::Point m, size_t n);
P42RepairedBobState RunP42RepairedBob(subprotocols::RoleSession& s,
                                      const SessionConfig& config,
                                      const geometry::StarPolygon& star);

}  // namespace ptincl::protocols

#endif  // PTINCL_PROTOCOLS_P42_HPP_
