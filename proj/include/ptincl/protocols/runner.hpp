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

#ifndef PTINCL_PROTOCOLS_RUNNER_HPP_
#define PTINCL_PROTOCOLS_RUNNER_HPP_

#include <any>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ptincl/geometry/types.hpp"
#include "ptincl/protocols/config.hpp"
#include "ptincl/transport/channel.hpp"
#include "ptincl/transport/transcript.hpp"

namespace ptincl::protocols {

using BobInput = std::variant<geometry::StarPolygon, geometry::GeneralPolygon>;

struct Diagnostics {
  // Alice only, star protocols.
  std::optional<size_t> wedge;
  bool boundary = false;
  // Ray probes of the faithful variant.
  std::optional<size_t> probes;
  // Bob only, general polygons.
  std::optional<double> chi;

  size_t rounds = 0;
  size_t messages = 0;
  size_t bytes_alice_to_bob = 0;
  size_t bytes_bob_to_alice = 0;

  std::vector<std::string> warnings;
  // What this party's view reveals beyond the result bit.
  std::vector<std::string> leakage;
};

struct InclusionResult {
  // Boundary points count as inside.
  bool inside = false;
  Diagnostics diagnostics;
  // The protocol state of this party, e.g. P41AliceState.
  std::any state;
};

// Throws Error(kValidation) when `polygon` is not a legal input for the
// configured protocol.
void ValidateBobInput(const SessionConfig& config, const BobInput& polygon);

// Drive one role over `channel`. When `transcript` is given it receives the
// frames as seen by this party. On a local error the role sends an abort
// frame to the peer, closes the channel and rethrows.
InclusionResult RunAlice(transport::Channel& channel,
                         const SessionConfig& config, geometry::Point m,
                         transport::Transcript* transcript = nullptr);
InclusionResult RunBob(transport::Channel& channel,
                       const SessionConfig& config, const BobInput& polygon,
                       transport::Transcript* transcript = nullptr);

struct LocalRun {
  InclusionResult alice;
  InclusionResult bob;
  // Recorded at Alice's endpoint.
  transport::Transcript transcript;
};

// Runs both roles concurrently over an in-memory channel pair. Rethrows the
// originating error if either side fails.
LocalRun RunLocal(const SessionConfig& config, geometry::Point m,
                  const BobInput& polygon);

std::vector<std::string> LeakageNotes(ProtocolId protocol,
                                      subprotocols::Role role);

}  // namespace ptincl::protocols

#endif  // PTINCL_PROTOCOLS_RUNNER_HPP_
