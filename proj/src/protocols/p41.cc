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

#include "ptincl/protocols/p41.hpp"

#include "common.hpp"
#include "ptincl/geometry/star.hpp"
#include "ptincl/subprotocols/millionaire.hpp"
#include "ptincl/subprotocols/scalar_product.hpp"

namespace ptincl::protocols {

using namespace internal;
using subprotocols::MillFinish;
using subprotocols::MillReply;
using subprotocols::MillRequest;
using subprotocols::SpFinish;
using subprotocols::SpReply;
using subprotocols::SpRequest;

P41AliceState RunP41Alice(RoleSession& s, const SessionConfig& c,
                          const crypto::AdditiveKeyPair& key, geometry::Point m,
                          size_t n) {
  const crypto::AdditivePublicKey& pk = key.public_key();
  const BigInt x[3] = {crypto::FromInt64(m.x), crypto::FromInt64(m.y), 1};
  P41AliceState st;
  s.Send(tag::kKey, KeyPayload(pk));
  for (size_t i = 0; i < n; ++i) {
    s.SendCiphers(tag::kSpRequest, pk, SpRequest(key, x, s.rng()));
    s.SendCiphers(tag::kSpRequest, pk, SpRequest(key, x, s.rng()));
    const auto ru = s.ExpectCiphers(tag::kSpReply, pk, 1);
    const auto rz = s.ExpectCiphers(tag::kSpReply, pk, 1);
    st.u.push_back(SpFinish(key, ru[0]));
    st.z.push_back(SpFinish(key, rz[0]));

    const auto mu = MillRequest(key, st.u.back(), c.blinding, s.rng());
    const auto mz = MillRequest(key, st.z.back(), c.blinding, s.rng());
    s.SendCiphers(tag::kMillRequest, pk, std::span(&mu, 1));
    s.SendCiphers(tag::kMillRequest, pk, std::span(&mz, 1));
    const auto cu = s.ExpectCiphers(tag::kMillReply, pk, 1);
    const auto cz = s.ExpectCiphers(tag::kMillReply, pk, 1);
    st.ray_signs.push_back(MillFinish(key, cu[0]));
    st.edge_signs.push_back(MillFinish(key, cz[0]));
  }
  const auto j = geometry::WedgeFromSigns(st.ray_signs);
  if (!j) {
    throw Error(ErrorCode::kConsistency, "ray signs do not locate a wedge");
  }
  st.wedge = *j;
  st.location = LocationOfSign(st.edge_signs[*j]);
  SendResult(s, geometry::IsInside(st.location));
  return st;
}

P41BobState RunP41Bob(RoleSession& s, const SessionConfig& c,
                      const geometry::StarPolygon& star) {
  const crypto::AdditivePublicKey pk = ExpectKey(s, c);
  const std::vector<LinearForm> rays = ToForms(geometry::RayForms(star));
  const std::vector<LinearForm> edges = ToForms(geometry::EdgeForms(star));
  const BigInt x_bound = c.blinding.coord_bound;
  crypto::Rng& rng = s.rng();
  P41BobState st;
  for (size_t i = 0; i < rays.size(); ++i) {
    const auto qu = s.ExpectCiphers(tag::kSpRequest, pk, 3);
    const auto qz = s.ExpectCiphers(tag::kSpRequest, pk, 3);
    st.v.push_back(rng.SignedBits(c.blinding.mask_bits));
    st.w.push_back(rng.SignedBits(c.blinding.mask_bits));
    const auto ru = SpReply(pk, qu, rays[i], st.v.back(), x_bound, rng);
    const auto rz = SpReply(pk, qz, edges[i], st.w.back(), x_bound, rng);
    s.SendCiphers(tag::kSpReply, pk, std::span(&ru, 1));
    s.SendCiphers(tag::kSpReply, pk, std::span(&rz, 1));

    const auto mu = s.ExpectCiphers(tag::kMillRequest, pk, 1);
    const auto mz = s.ExpectCiphers(tag::kMillRequest, pk, 1);
    const auto cu = MillReply(pk, mu[0], st.v.back(), c.blinding, rng);
    const auto cz = MillReply(pk, mz[0], st.w.back(), c.blinding, rng);
    s.SendCiphers(tag::kMillReply, pk, std::span(&cu, 1));
    s.SendCiphers(tag::kMillReply, pk, std::span(&cz, 1));
  }
  st.inside = ExpectResult(s);
  return st;
}

}  // namespace ptincl::protocols
