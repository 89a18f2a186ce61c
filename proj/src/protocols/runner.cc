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

#include "ptincl/protocols/runner.hpp"

#include <exception>
#include <memory>
#include <thread>

#include "ptincl/error.hpp"
#include "ptincl/geometry/general.hpp"
#include "ptincl/geometry/predicates.hpp"
#include "ptincl/geometry/star.hpp"
#include "ptincl/protocols/handshake.hpp"
#include "ptincl/protocols/p41.hpp"
#include "ptincl/protocols/p42.hpp"
#include "ptincl/protocols/p51.hpp"

namespace ptincl::protocols {

using subprotocols::Role;
using subprotocols::RoleSession;
using transport::Direction;

namespace {

// Probes sent against the ray list, padding included.
size_t RayProbeCount(const std::vector<P42Probe>& probes) {
  size_t k = 0;
  for (const auto& p : probes) k += p.list == 0;
  return k;
}

std::shared_ptr<const crypto::AdditiveKeyPair> KeyFor(
    const std::shared_ptr<const crypto::AdditiveKeyPair>& given,
    const SessionConfig& c, crypto::Rng& rng) {
  if (given) {
    if (given->public_key().bits() != c.additive_bits ||
        given->public_key().plaintext_bound() != c.plaintext_bound) {
      throw Error(ErrorCode::kValidation,
                  "supplied key does not match the configured parameters");
    }
    return given;
  }
  return std::make_shared<const crypto::AdditiveKeyPair>(
      crypto::AdditiveKeyPair::Generate(c.additive_bits, rng,
                                        c.plaintext_bound));
}

void FillCounters(Diagnostics& d, const transport::Transcript& t) {
  d.rounds = t.Rounds();
  d.messages = t.size();
  d.bytes_alice_to_bob = t.Bytes(Direction::kAliceToBob);
  d.bytes_bob_to_alice = t.Bytes(Direction::kBobToAlice);
}

std::string ExposedWarning(size_t count) {
  return std::to_string(count) +
         " layered components are 0 or +-1 and stay visible through the "
         "commutative layers";
}

geometry::GeneralPolygon AsGeneral(const BobInput& in) {
  if (const auto* star = std::get_if<geometry::StarPolygon>(&in)) {
    return geometry::ToGeneral(*star);
  }
  return std::get<geometry::GeneralPolygon>(in);
}

// Runs `body` and turns a local failure into an abort for the peer.
template <typename Fn>
InclusionResult Guarded(RoleSession& s, transport::Channel& ch, Fn&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (!e.from_peer()) s.SendAbort(e);
    ch.Close();
    throw;
  } catch (const std::exception& e) {
    s.SendAbort(Error(ErrorCode::kProtocol, e.what()));
    ch.Close();
    throw;
  }
}

}  // namespace

std::vector<std::string> LeakageNotes(ProtocolId protocol, Role role) {
  const bool alice = role == Role::kAlice;
  switch (protocol) {
    case ProtocolId::kP41:
      if (alice) {
        return {"wedge index of the point",
                "signs of every ray and edge form at the point",
                "blinded magnitudes rho*|A.B_i| and rho*|A.C_i|"};
      }
      return {"message sizes only"};
    case ProtocolId::kP42Faithful:
      if (alice) {
        return {"wedge index of the point",
                "directions of the probed kernel-to-vertex vectors up to "
                "positive scale",
                "blinded edge form of the located wedge",
                "positions of layered components equal to 0 or +-1"};
      }
      return {"rotated indices of the probes, which constrain the search path",
              "positions of components equal to 0 or +-1"};
    case ProtocolId::kP42Repaired:
      if (alice) {
        return {"wedge index of the point",
                "signs and blinded magnitudes of every ray form",
                "blinded magnitude of the located edge form"};
      }
      return {"message sizes only"};
    case ProtocolId::kP51:
      if (alice) {
        return {"inner/outer bit of every vertex wedge",
                "signs and blinded magnitudes of every wedge form"};
      }
      return {"U.V, the weighted count of inner wedges"};
  }
  return {};
}

void ValidateBobInput(const SessionConfig& c, const BobInput& polygon) {
  if (IsStarProtocol(c.protocol)) {
    const auto* star = std::get_if<geometry::StarPolygon>(&polygon);
    if (!star) {
      throw Error(ErrorCode::kValidation,
                  std::string(ProtocolName(c.protocol)) +
                      " needs a star polygon with a kernel point");
    }
    if (auto v = geometry::ValidateStar(*star, c.blinding.coord_bound)) {
      throw Error(ErrorCode::kValidation,
                  std::string("invalid star polygon: ") + v->message);
    }
    return;
  }
  if (auto v = geometry::ValidatePolygon(AsGeneral(polygon),
                                         c.blinding.coord_bound)) {
    throw Error(ErrorCode::kValidation,
                std::string("invalid polygon: ") + v->message);
  }
}

InclusionResult RunAlice(transport::Channel& channel, const SessionConfig& c,
                         geometry::Point m, transport::Transcript* transcript) {
  transport::Transcript local;
  transport::RecordingChannel rec(channel, local, Direction::kAliceToBob);
  crypto::Rng rng(c.alice_seed);
  RoleSession s(Role::kAlice, rec, rng);
  InclusionResult out = Guarded(s, channel, [&]() -> InclusionResult {
    c.Validate();
    if (!geometry::WithinBound(m, c.blinding.coord_bound)) {
      throw Error(ErrorCode::kValidation,
                  "query point exceeds the coordinate bound");
    }
    const size_t n = HandshakeAlice(s, c);
    InclusionResult r;
    Diagnostics& d = r.diagnostics;
    switch (c.protocol) {
      case ProtocolId::kP41: {
        const auto key = KeyFor(c.alice_key, c, rng);
        P41AliceState st = RunP41Alice(s, c, *key, m, n);
        r.inside = geometry::IsInside(st.location);
        d.wedge = st.wedge;
        d.boundary = st.location == geometry::Location::kBoundary;
        r.state = std::move(st);
        break;
      }
      case ProtocolId::kP42Faithful: {
        P42FaithfulAliceState st = RunP42FaithfulAlice(s, c, m, n);
        r.inside = geometry::IsInside(st.location);
        d.wedge = st.wedge;
        d.boundary = st.location == geometry::Location::kBoundary;
        d.probes = RayProbeCount(st.probes);
        if (st.exposed_components > 0) {
          d.warnings.push_back(ExposedWarning(st.exposed_components));
        }
        r.state = std::move(st);
        break;
      }
      case ProtocolId::kP42Repaired: {
        const auto key = KeyFor(c.alice_key, c, rng);
        P42RepairedAliceState st = RunP42RepairedAlice(s, c, *key, m, n);
        r.inside = geometry::IsInside(st.location);
        d.wedge = st.wedge;
        d.boundary = st.location == geometry::Location::kBoundary;
        r.state = std::move(st);
        break;
      }
      case ProtocolId::kP51: {
        const auto key = KeyFor(c.alice_key, c, rng);
        P51AliceState st = RunP51Alice(s, c, *key, m, n);
        r.inside = st.inside;
        r.state = std::move(st);
        break;
      }
    }
    return r;
  });
  FillCounters(out.diagnostics, local);
  out.diagnostics.leakage = LeakageNotes(c.protocol, Role::kAlice);
  if (transcript) *transcript = local;
  return out;
}

InclusionResult RunBob(transport::Channel& channel, const SessionConfig& c,
                       const BobInput& polygon,
                       transport::Transcript* transcript) {
  transport::Transcript local;
  transport::RecordingChannel rec(channel, local, Direction::kBobToAlice);
  crypto::Rng rng(c.bob_seed);
  RoleSession s(Role::kBob, rec, rng);
  InclusionResult out = Guarded(s, channel, [&]() -> InclusionResult {
    c.Validate();
    InclusionResult r;
    Diagnostics& d = r.diagnostics;
    if (IsStarProtocol(c.protocol)) {
      ValidateBobInput(c, polygon);
      const auto* star = std::get_if<geometry::StarPolygon>(&polygon);
      HandshakeBob(s, c, static_cast<uint32_t>(star->vertices.size()));
      switch (c.protocol) {
        case ProtocolId::kP41: {
          P41BobState st = RunP41Bob(s, c, *star);
          r.inside = st.inside;
          r.state = std::move(st);
          break;
        }
        case ProtocolId::kP42Faithful: {
          P42FaithfulBobState st = RunP42FaithfulBob(s, c, *star);
          r.inside = st.inside;
          d.probes = RayProbeCount(st.probes);
          if (st.exposed_components > 0) {
            d.warnings.push_back(ExposedWarning(st.exposed_components));
          }
          r.state = std::move(st);
          break;
        }
        default: {
          P42RepairedBobState st = RunP42RepairedBob(s, c, *star);
          r.inside = st.inside;
          r.state = std::move(st);
          break;
        }
      }
      return r;
    }
    ValidateBobInput(c, polygon);
    const geometry::GeneralPolygon poly = AsGeneral(polygon);
    HandshakeBob(s, c, static_cast<uint32_t>(poly.vertex_count()));
    const auto key = KeyFor(c.bob_key, c, rng);
    P51BobState st = RunP51Bob(s, c, *key, poly);
    r.inside = st.inside;
    d.chi = st.chi;
    r.state = std::move(st);
    return r;
  });
  FillCounters(out.diagnostics, local);
  out.diagnostics.leakage = LeakageNotes(c.protocol, Role::kBob);
  if (transcript) *transcript = local;
  return out;
}

LocalRun RunLocal(const SessionConfig& config, geometry::Point m,
                  const BobInput& polygon) {
  auto [alice_end, bob_end] = transport::MemoryChannelPair();
  LocalRun run;
  std::exception_ptr bob_error;
  std::thread bob([&, ch = bob_end.get()] {
    try {
      run.bob = RunBob(*ch, config, polygon);
    } catch (...) {
      bob_error = std::current_exception();
    }
  });
  std::exception_ptr alice_error;
  try {
    run.alice = RunAlice(*alice_end, config, m, &run.transcript);
  } catch (...) {
    alice_error = std::current_exception();
  }
  bob.join();
  if (!alice_error && !bob_error) return run;

  auto from_peer = [](const std::exception_ptr& p) {
    try {
      std::rethrow_exception(p);
    } catch (const Error& e) {
      return e.from_peer();
    } catch (...) {
      return false;
    }
  };
  if (alice_error && !from_peer(alice_error)) std::rethrow_exception(alice_error);
  if (bob_error && !from_peer(bob_error)) std::rethrow_exception(bob_error);
  std::rethrow_exception(alice_error ? alice_error : bob_error);
}

}  // namespace ptincl::protocols
