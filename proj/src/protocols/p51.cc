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

#include "ptincl/protocols/p51.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "common.hpp"
#include "ptincl/geometry/general.hpp"
#include "ptincl/subprotocols/scalar_product.hpp"

namespace ptincl::protocols {

using namespace internal;

namespace {

// cross(u, m - v) as a form in m.
LinearForm CrossForm(geometry::Point u, geometry::Point v) {
  return {crypto::FromInt64(-u.y), crypto::FromInt64(u.x),
          crypto::FromInt64(u.y * v.x - u.x * v.y)};
}

}  // namespace

std::vector<LinearForm> InnerWedgeForms(const geometry::GeneralPolygon& poly) {
  std::vector<LinearForm> out;
  for (const auto& info : geometry::VertexAngles(poly)) {
    out.push_back(CrossForm(info.to_prev, info.vertex));
    out.push_back(CrossForm(info.to_next, info.vertex));
    out.push_back(CrossForm(-info.to_prev, info.vertex));
    out.push_back(CrossForm(-info.to_next, info.vertex));
  }
  return out;
}

std::vector<int> InnerIndicators(const std::vector<int>& signs) {
  std::vector<int> out;
  for (size_t i = 0; i + 3 < signs.size(); i += 4) {
    for (size_t k = 0; k < 4; ++k) {
      if (signs[i + k] == 0) {
        throw Error(ErrorCode::kOnRay,
                    "query point lies on a ray of vertex " +
                        std::to_string(i / 4) +
                        "; the cross function is undefined there");
      }
    }
    const bool first = signs[i] > 0 && signs[i + 1] < 0;
    const bool second = signs[i + 2] > 0 && signs[i + 3] < 0;
    out.push_back(first || second ? 1 : 0);
  }
  return out;
}

P51AliceState RunP51Alice(RoleSession& s, const SessionConfig& c,
                          const crypto::AdditiveKeyPair& key, geometry::Point m,
                          size_t n) {
  const crypto::AdditivePublicKey& pk = key.public_key();
  P51AliceState st;
  s.Send(tag::kKey, KeyPayload(pk));
  s.SendCiphers(tag::kSignQuery, pk,
                subprotocols::SignQuery(key, crypto::FromInt64(m.x),
                                        crypto::FromInt64(m.y), s.rng()));
  const crypto::AdditivePublicKey bob_pk = ExpectKey(s, c);
  const auto replies = s.ExpectCiphers(tag::kSignReply, pk, 4 * n);
  const auto weights = s.ExpectCiphers(tag::kSpRequest, bob_pk, n);
  st.signs = subprotocols::SignFinish(key, replies);
  st.inner = InnerIndicators(st.signs);

  std::vector<BigInt> y(st.inner.begin(), st.inner.end());
  const crypto::AdditiveCiphertext sp =
      subprotocols::SpReply(bob_pk, weights, y, 0, 1, s.rng());
  s.SendCiphers(tag::kSpReply, bob_pk, std::span(&sp, 1));
  st.inside = ExpectResult(s);
  return st;
}

P51BobState RunP51Bob(RoleSession& s, const SessionConfig& c,
                      const crypto::AdditiveKeyPair& key,
                      const geometry::GeneralPolygon& poly) {
  const crypto::AdditivePublicKey alice_pk = ExpectKey(s, c);
  const auto query = s.ExpectCiphers(tag::kSignQuery, alice_pk, 2);
  const std::vector<LinearForm> forms = InnerWedgeForms(poly);
  P51BobState st;
  std::vector<BigInt> v;
  for (const auto& info : geometry::VertexAngles(poly)) {
    const double frac = info.theta / (2 * std::numbers::pi);
    st.theta_sum += info.convex ? -frac : 1.0 - frac;
    st.weights.push_back(info.convex ? 1 : -1);
    v.push_back(st.weights.back());
  }

  crypto::Rng& rng = s.rng();
  const auto blinds =
      subprotocols::RandomBlinds(rng, forms.size(), c.blinding.blind_bound);
  s.Send(tag::kKey, KeyPayload(key.public_key()));
  s.SendCiphers(tag::kSignReply, alice_pk,
                subprotocols::SignReply(alice_pk, query, forms, blinds,
                                        c.blinding, rng));
  s.SendCiphers(tag::kSpRequest, key.public_key(),
                subprotocols::SpRequest(key, v, rng));

  const auto sp = s.ExpectCiphers(tag::kSpReply, key.public_key(), 1);
  st.uv2 = subprotocols::SpFinish(key, sp[0]);
  st.chi = st.uv2.get_d() / 2.0 + st.theta_sum;
  const double rounded = std::round(st.chi);
  if (std::fabs(st.chi - rounded) >= c.chi_tolerance ||
      (rounded != 0.0 && rounded != 1.0)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "characteristic sum " << st.chi << " is not within "
        << c.chi_tolerance << " of 0 or 1";
    throw Error(ErrorCode::kConsistency, msg.str());
  }
  st.inside = rounded == 1.0;
  SendResult(s, st.inside);
  return st;
}

}  // namespace ptincl::protocols
