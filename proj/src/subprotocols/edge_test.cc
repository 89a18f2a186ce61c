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

#include "ptincl/subprotocols/edge_test.hpp"

#include <string>

#include "ptincl/subprotocols/millionaire.hpp"
#include "ptincl/subprotocols/scalar_product.hpp"

namespace ptincl::subprotocols {

std::vector<AdditiveCiphertext> EdgeSelect(const AdditiveKeyPair& alice,
                                           size_t n, size_t j,
                                           crypto::Rng& rng) {
  if (j >= n) {
    throw Error(ErrorCode::kValidation,
                "selection index " + std::to_string(j) + " out of range");
  }
  std::vector<AdditiveCiphertext> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(alice.Encrypt(i == j, rng));
  return out;
}

std::vector<AdditiveCiphertext> EdgeMask(
    const AdditivePublicKey& pk, std::span<const AdditiveCiphertext> selection,
    std::span<const LinearForm> forms, const LinearForm& mask,
    crypto::Rng& rng) {
  if (selection.size() != forms.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "selection has " + std::to_string(selection.size()) +
                    " entries for " + std::to_string(forms.size()) + " forms");
  }
  std::vector<AdditiveCiphertext> out;
  for (size_t k = 0; k < 3; ++k) {
    BigInt worst = 0;
    for (const LinearForm& f : forms) {
      if (abs(f[k]) > worst) worst = abs(f[k]);
    }
    if (worst + abs(mask[k]) > pk.plaintext_bound()) {
      throw Error(ErrorCode::kOverflow, "masked coefficient too large");
    }
    AdditiveCiphertext acc = pk.Embed(mask[k]);
    for (size_t i = 0; i < forms.size(); ++i) {
      if (forms[i][k] != 0) {
        acc = pk.Add(acc, pk.ScalarMul(selection[i], forms[i][k]));
      }
    }
    out.push_back(pk.Rerandomize(acc, rng));
  }
  return out;
}

int EdgeTestAlice(RoleSession& s, const AdditiveKeyPair& alice, size_t n,
                  size_t j, const BigInt& a, const BigInt& b,
                  const BlindingParams& params, EdgeTrace* trace) {
  const AdditivePublicKey& pk = alice.public_key();
  const BigInt x[3] = {a, b, 1};
  s.SendCiphers(tag::kEdgeSelect, pk, EdgeSelect(alice, n, j, s.rng()));
  s.SendCiphers(tag::kSpRequest, pk, SpRequest(alice, x, s.rng()));

  const auto masked = s.ExpectCiphers(tag::kEdgeMasked, pk, 3);
  const auto sp = s.ExpectCiphers(tag::kSpReply, pk, 1);
  LinearForm form;
  for (size_t k = 0; k < 3; ++k) form[k] = alice.Decrypt(masked[k]);
  const BigInt product = SpFinish(alice, sp[0]);
  const BigInt diff = form[0] * a + form[1] * b + form[2] - product;

  const AdditiveCiphertext req = MillRequest(alice, diff, params, s.rng());
  s.SendCiphers(tag::kMillRequest, pk, std::span(&req, 1));
  BigInt blinded;
  const int sign =
      MillFinish(alice, s.ExpectCiphers(tag::kMillReply, pk, 1)[0], &blinded);
  if (trace) *trace = {form, product, diff, blinded};
  return sign;
}

void EdgeTestBob(RoleSession& s, const AdditivePublicKey& pk,
                 std::span<const LinearForm> forms,
                 const BlindingParams& params) {
  const auto selection = s.ExpectCiphers(tag::kEdgeSelect, pk, forms.size());
  const auto request = s.ExpectCiphers(tag::kSpRequest, pk, 3);

  crypto::Rng& rng = s.rng();
  const LinearForm mask = {rng.SignedBits(params.coeff_mask_bits),
                           rng.SignedBits(params.coeff_mask_bits),
                           rng.SignedBits(params.coeff_mask_bits)};
  const BigInt v = rng.SignedBits(params.mask_bits);
  s.SendCiphers(tag::kEdgeMasked, pk, EdgeMask(pk, selection, forms, mask, rng));
  const AdditiveCiphertext reply =
      SpReply(pk, request, mask, v, params.coord_bound, rng);
  s.SendCiphers(tag::kSpReply, pk, std::span(&reply, 1));

  const auto req = s.ExpectCiphers(tag::kMillRequest, pk, 1);
  const AdditiveCiphertext out = MillReply(pk, req[0], -v, params, rng);
  s.SendCiphers(tag::kMillReply, pk, std::span(&out, 1));
}

}  // namespace ptincl::subprotocols
