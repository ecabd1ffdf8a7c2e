// Copyright 2026 The ATASSES Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "atss/rlwe.hpp"

#include "atss/errors.hpp"

namespace atss {
namespace rlwe {
namespace {

CipherParams make(size_t degree, Modulus q, Modulus p, BigInt noise_bound,
                  uint32_t max_parties) {
  CipherParams out;
  out.degree = degree;
  out.q = std::move(q);
  out.p = std::move(p);
  out.delta = out.q.value() / out.p.value();
  out.noise_bound = std::move(noise_bound);
  out.max_parties = max_parties;
  if (degree == 0 || (degree & (degree - 1)) != 0) {
    throw ParamError("ring degree must be a power of two");
  }
  if (out.noise_bound < 0) throw ParamError("negative noise bound");
  return out;
}

}  // namespace

void CipherParams::validate() const {
  if (delta < 1) throw ParamError("delta must be at least 1");
  if (!p.is_prime()) throw ParamError("plaintext modulus must be prime");
  const BigInt rhs =
      2 * p.value() * p.value() * noise_bound * max_parties + 2 * p.value();
  if (q.value() <= rhs) {
    throw ParamError("ciphertext modulus too small: need Q' > 2 P'^2 B' N + 2 P'");
  }
}

CipherParams CipherParams::validated(size_t degree, Modulus q, Modulus p,
                                     BigInt noise_bound, uint32_t max_parties) {
  CipherParams out =
      make(degree, std::move(q), std::move(p), std::move(noise_bound),
           max_parties);
  out.validate();
  return out;
}

CipherParams CipherParams::unchecked(size_t degree, Modulus q, Modulus p,
                                     BigInt noise_bound, uint32_t max_parties) {
  return make(degree, std::move(q), std::move(p), std::move(noise_bound),
              max_parties);
}

BigInt find_cipher_modulus(const Modulus& p, const BigInt& noise_bound,
                           uint32_t max_parties, size_t degree) {
  const BigInt bound = 2 * p.value() * p.value() * (noise_bound + 1) *
                           max_parties + 2 * p.value();
  BigInt step = 2 * BigInt(degree);
  if (p.value() % 2 == 1) {
    step *= p.value();
  } else {
    throw ParamError("plaintext modulus must be odd");
  }
  BigInt k = bound / step + 1;
  while (true) {
    BigInt candidate = k * step + 1;
    if (is_probable_prime(candidate)) return candidate;
    k += 1;
  }
}

SecretKey keygen(Rng& rng, const CipherParams& params) {
  return SecretKey{sample_ternary(rng, params.degree, params.q)};
}

RlweCiphertext sk_encrypt_with_error(const SecretKey& sk, const RingPoly& m,
                                     const RingPoly& a, const RingPoly& e,
                                     const CipherParams& params) {
  if (m.modulus() != params.p || m.size() != params.degree) {
    throw ParamError("plaintext not in the message ring");
  }
  if (a.modulus() != params.q || a.size() != params.degree) {
    throw ParamError("common polynomial not in the ciphertext ring");
  }
  RlweCiphertext ct;
  ct.c0 = poly_add(poly_add(poly_mul(a, sk.key), e),
                   lift_scale(m, params.delta, params.q));
  ct.c1 = poly_neg(a);
  return ct;
}

RlweCiphertext sk_encrypt(const SecretKey& sk, const RingPoly& m,
                          const RingPoly& a, const CipherParams& params,
                          Rng& rng) {
  RingPoly e = sample_bounded(rng, params.degree, params.q, params.noise_bound);
  return sk_encrypt_with_error(sk, m, a, e, params);
}

RingPoly decrypt(const SecretKey& sk, const RlweCiphertext& ct,
                 const CipherParams& params) {
  RingPoly b = poly_add(ct.c0, poly_mul(ct.c1, sk.key));
  return decode_round(b, params.delta, params.p);
}

RlweCiphertext combine_weighted(std::span<const RlweCiphertext* const> cts,
                                const std::vector<BigInt>& weights) {
  if (cts.empty()) throw ParamError("nothing to combine");
  if (cts.size() != weights.size()) throw ParamError("weight count mismatch");
  for (const auto* ct : cts) {
    if (ct->c1 != cts[0]->c1) {
      throw ParamError("combine requires a common c1 polynomial");
    }
  }
  RlweCiphertext out;
  out.c0 = RingPoly(cts[0]->c0.modulus(), cts[0]->c0.size());
  for (size_t i = 0; i < cts.size(); ++i) {
    add_scaled(out.c0, weights[i], cts[i]->c0);
  }
  out.c1 = cts[0]->c1;
  return out;
}

RlweCiphertext combine_weighted(const std::vector<RlweCiphertext>& cts,
                                const std::vector<BigInt>& weights) {
  std::vector<const RlweCiphertext*> refs;
  refs.reserve(cts.size());
  for (const auto& ct : cts) refs.push_back(&ct);
  return combine_weighted(refs, weights);
}

}  // namespace rlwe
}  // namespace atss
