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

#include "ptincl/protocols/p42.hpp"

#include <bit>

#include "common.hpp"
#include "ptincl/crypto/commutative.hpp"
#include "ptincl/geometry/predicates.hpp"
#include "ptincl/geometry/star.hpp"
#include "ptincl/subprotocols/blinded_sign.hpp"
#include "ptincl/subprotocols/millionaire.hpp"

namespace ptincl::protocols {

using namespace internal;
using crypto::CommutativeGroup;
using crypto::CommutativeKey;

size_t FaithfulRayProbes(size_t n) {
  return 1 + static_cast<size_t>(std::bit_width(n - 1));
}

namespace {

using Components = std::array<BigInt, 3>;

std::vector<uint8_t> EncodeElements(const CommutativeGroup& g,
                                    const std::vector<BigInt>& v) {
  transport::Writer w;
  w.Ints(v, g.width());
  return w.Take();
}

std::vector<BigInt> DecodeElements(const CommutativeGroup& g,
                                   const transport::Frame& f, size_t expected) {
  transport::Reader r(f.payload);
  std::vector<BigInt> v = r.Ints();
  r.End();
  if (v.size() != expected) {
    throw Error(ErrorCode::kProtocol, "unexpected element count");
  }
  for (const BigInt& x : v) {
    if (x < 0 || x >= g.p()) {
      throw Error(ErrorCode::kFrameDecode, "element outside the group");
    }
  }
  return v;
}

bool Exposed(const CommutativeGroup& g, const BigInt& layered) {
  return layered == 0 || layered == 1 || layered == g.p() - 1;
}

// Sign of A.(rB) for the point moved by (eps, eps^2), eps -> 0+.
int PerturbedSign(const BigInt& value, const Components& rb) {
  if (value != 0) return sgn(value);
  if (rb[0] != 0) return sgn(rb[0]);
  return sgn(rb[1]);
}

// Direction of the vertex seen from the kernel, up to a positive scale.
struct Dir {
  BigInt x, y;
};

Dir DirectionOf(const Components& rb) { return {rb[1], -rb[0]}; }

// 0 when the ray lies in [0, pi) from the reference, 1 for [pi, 2pi).
int HalfOf(const Dir& ref, const Dir& d) {
  const BigInt cross = ref.x * d.y - ref.y * d.x;
  if (cross > 0) return 0;
  if (cross < 0) return 1;
  const BigInt dot = ref.x * d.x + ref.y * d.y;
  return dot > 0 ? 0 : 1;
}

}  // namespace

P42FaithfulAliceState RunP42FaithfulAlice(RoleSession& s,
                                          const SessionConfig& c,
                                          geometry::Point m, size_t n) {
  const auto group = CommutativeGroup::Setup(c.commutative_bits, c.public_seed);
  crypto::Rng& rng = s.rng();
  const CommutativeKey key = CommutativeKey::Generate(group, rng);
  const BigInt a = crypto::FromInt64(m.x);
  const BigInt b = crypto::FromInt64(m.y);
  P42FaithfulAliceState st;

  const std::vector<BigInt> layered =
      DecodeElements(*group, s.Expect(tag::kLayered), 6 * n);
  std::vector<BigInt> blind = DecodeElements(*group, s.Expect(tag::kBlind), 1);
  for (const BigInt& x : layered) st.exposed_components += Exposed(*group, x);

  st.rotation = rng.Uniform(n);
  std::vector<BigInt> relayered(6 * n);
  for (size_t list = 0; list < 2; ++list) {
    for (size_t k = 0; k < n; ++k) {
      const size_t src = (k + st.rotation) % n;
      for (size_t comp = 0; comp < 3; ++comp) {
        relayered[list * 3 * n + 3 * k + comp] =
            key.Layer(layered[list * 3 * n + 3 * src + comp]);
      }
    }
  }
  s.Send(tag::kRelayered, EncodeElements(*group, relayered));

  const size_t ray_probes = FaithfulRayProbes(n);
  auto probe = [&](uint8_t list, size_t k, bool dummy, bool more) {
    transport::Writer w;
    w.U8(list);
    w.U32(static_cast<uint32_t>(k));
    w.Int(key.Layer(blind[0]), group->width());
    s.Send(tag::kProbe, w.Take());
    const std::vector<BigInt> reply =
        DecodeElements(*group, s.Expect(tag::kProbeReply), 3);
    if (more) blind = DecodeElements(*group, s.Expect(tag::kBlind), 1);
    Components out;
    for (size_t comp = 0; comp < 3; ++comp) {
      out[comp] = group->Decode(key.Unlayer(reply[comp]));
    }
    st.probes.push_back({list, static_cast<uint32_t>(k), dummy});
    st.blinded.push_back(out);
    return out;
  };
  auto value_at = [&](const Components& rb) {
    return BigInt(rb[0] * a + rb[1] * b + rb[2]);
  };

  st.reference = rng.Uniform(n);
  const Components ref = probe(0, st.reference, false, true);
  const Dir ref_dir = DirectionOf(ref);
  const int phi_half = PerturbedSign(value_at(ref), ref) > 0 ? 0 : 1;

  // Offsets from the reference in counterclockwise order; offset lo is
  // known to lie at or before the point, offset hi after it.
  size_t lo = 0, hi = n;
  for (size_t step = 1; step < ray_probes; ++step) {
    if (hi - lo <= 1) {
      probe(0, rng.Uniform(n), true, true);
      continue;
    }
    const size_t mid = lo + (hi - lo) / 2;
    const Components rb = probe(0, (st.reference + mid) % n, false, true);
    const int half = HalfOf(ref_dir, DirectionOf(rb));
    bool before;
    if (half != phi_half) {
      before = half < phi_half;
    } else {
      before = PerturbedSign(value_at(rb), rb) > 0;
    }
    (before ? lo : hi) = mid;
  }

  st.wedge_rotated = (st.reference + lo) % n;
  st.wedge = (st.wedge_rotated + st.rotation) % n;
  const Components rc = probe(1, st.wedge_rotated, false, false);
  st.edge_value = value_at(rc);
  st.location = LocationOfSign(sgn(st.edge_value));
  SendResult(s, geometry::IsInside(st.location));
  return st;
}

P42FaithfulBobState RunP42FaithfulBob(RoleSession& s, const SessionConfig& c,
                                      const geometry::StarPolygon& star) {
  const auto group = CommutativeGroup::Setup(c.commutative_bits, c.public_seed);
  crypto::Rng& rng = s.rng();
  const CommutativeKey key = CommutativeKey::Generate(group, rng);
  const size_t n = star.vertices.size();
  P42FaithfulBobState st;

  const auto rays = geometry::RayForms(star);
  const auto edges = geometry::EdgeForms(star);
  std::vector<BigInt> layered;
  layered.reserve(6 * n);
  for (const auto* list : {&rays, &edges}) {
    for (const auto& t : *list) {
      for (int64_t comp : t) {
        const BigInt x = key.Layer(group->Encode(crypto::FromInt64(comp)));
        st.exposed_components += Exposed(*group, x);
        layered.push_back(x);
      }
    }
  }
  auto send_blind = [&]() {
    const BigInt r = subprotocols::RandomBlind(rng, c.blinding.blind_bound);
    s.Send(tag::kBlind, EncodeElements(*group, {key.Layer(r)}));
  };
  s.Send(tag::kLayered, EncodeElements(*group, layered));
  send_blind();

  const std::vector<BigInt> relayered =
      DecodeElements(*group, s.Expect(tag::kRelayered), 6 * n);
  std::vector<BigInt> stripped(6 * n);
  for (size_t i = 0; i < 6 * n; ++i) stripped[i] = key.Unlayer(relayered[i]);

  const size_t total = FaithfulRayProbes(n) + 1;
  for (size_t p = 0; p < total; ++p) {
    const transport::Frame f = s.Expect(tag::kProbe);
    transport::Reader r(f.payload);
    const uint8_t list = r.U8();
    const uint32_t k = r.U32();
    const BigInt elem = r.Int();
    r.End();
    const uint8_t want = p + 1 == total ? 1 : 0;
    if (list != want || k >= n) {
      throw Error(ErrorCode::kProtocol, "malformed probe");
    }
    group->CheckElement(elem);
    st.probes.push_back({list, k, false});
    const BigInt ea_r = key.Unlayer(elem);
    std::vector<BigInt> reply(3);
    for (size_t comp = 0; comp < 3; ++comp) {
      reply[comp] = key.Multiply(ea_r, stripped[list * 3 * n + 3 * k + comp]);
    }
    s.Send(tag::kProbeReply, EncodeElements(*group, reply));
    if (p + 1 < total) send_blind();
  }
  st.inside = ExpectResult(s);
  return st;
}

P42RepairedAliceState RunP42RepairedAlice(RoleSession& s,
                                          const SessionConfig& c,
                                          const crypto::AdditiveKeyPair& key,
                                          geometry::Point m, size_t n) {
  const crypto::AdditivePublicKey& pk = key.public_key();
  const BigInt a = crypto::FromInt64(m.x);
  const BigInt b = crypto::FromInt64(m.y);
  P42RepairedAliceState st;
  s.Send(tag::kKey, KeyPayload(pk));
  s.SendCiphers(tag::kSignQuery, pk, subprotocols::SignQuery(key, a, b, s.rng()));
  st.ray_signs =
      subprotocols::SignFinish(key, s.ExpectCiphers(tag::kSignReply, pk, n));
  const auto j = geometry::WedgeFromSigns(st.ray_signs);
  if (!j) {
    throw Error(ErrorCode::kConsistency, "ray signs do not locate a wedge");
  }
  st.wedge = *j;
  const int sign = subprotocols::EdgeTestAlice(s, key, n, *j, a, b, c.blinding,
                                               &st.edge);
  st.location = LocationOfSign(sign);
  SendResult(s, geometry::IsInside(st.location));
  return st;
}

P42RepairedBobState RunP42RepairedBob(RoleSession& s, const SessionConfig& c,
                                      const geometry::StarPolygon& star) {
  const crypto::AdditivePublicKey pk = ExpectKey(s, c);
  const std::vector<LinearForm> rays = ToForms(geometry::RayForms(star));
  const std::vector<LinearForm> edges = ToForms(geometry::EdgeForms(star));
  const auto query = s.ExpectCiphers(tag::kSignQuery, pk, 2);
  const auto blinds =
      subprotocols::RandomBlinds(s.rng(), rays.size(), c.blinding.blind_bound);
  s.SendCiphers(tag::kSignReply, pk,
                subprotocols::SignReply(pk, query, rays, blinds, c.blinding,
                                        s.rng()));
  subprotocols::EdgeTestBob(s, pk, edges, c.blinding);
  P42RepairedBobState st;
  st.inside = ExpectResult(s);
  return st;
}

}  // namespace ptincl::protocols
