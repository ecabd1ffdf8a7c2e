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

#ifndef ATSS_RLWE_HPP_
#define ATSS_RLWE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "atss/ring.hpp"
#include "atss/rng.hpp"

namespace atss {
namespace rlwe {

// Parameters of the secret-key cipher protecting shares: plaintexts live mod
// p, ciphertexts mod q, fresh errors are uniform with norm at most
// noise_bound. Validation pins q > 2 p^2 noise_bound N + 2p, which keeps the
// combined error of up to N Lagrange-weighted ciphertexts under delta/2.
struct CipherParams {
  size_t degree = 0;       // ring degree M'
  Modulus q;               // ciphertext modulus Q'
  Modulus p;               // plaintext modulus P'
  BigInt delta = 0;        // floor(Q'/P')
  BigInt noise_bound = 0;  // B'
  uint32_t max_parties = 0;

  // Throws ParamError unless q > 2 p^2 B' N + 2p, p prime, delta >= 1.
  static CipherParams validated(size_t degree, Modulus q, Modulus p,
                                BigInt noise_bound, uint32_t max_parties);
  // Construction without the modulus inequality, for raw cipher math.
  static CipherParams unchecked(size_t degree, Modulus q, Modulus p,
                                BigInt noise_bound, uint32_t max_parties);
  void validate() const;
};

// Smallest prime q ≡ 1 (mod 2*degree) and ≡ 1 (mod p) above
// 2 p^2 (B'+1) N + 2p. The congruence mod 2*degree enables the NTT; the
// congruence mod p makes q mod p = 1, so scaling a plaintext by an integer
// weight w adds at most floor(w*m/p) <= N(p-1) to the error on top of the
// N p B' budget — hence the B'+1 slack in the search bound.
BigInt find_cipher_modulus(const Modulus& p, const BigInt& noise_bound,
                           uint32_t max_parties, size_t degree);

struct SecretKey {
  RingPoly key;  // ternary, mod q
};

// Fresh ciphertext of m under sk: c0 + c1*sk = delta*lift(m) + e,
// ||e|| <= noise_bound; c1 = -a for the common random polynomial a.
struct RlweCiphertext {
  RingPoly c0;
  RingPoly c1;
};

SecretKey keygen(Rng& rng, const CipherParams& params);

RlweCiphertext sk_encrypt(const SecretKey& sk, const RingPoly& m,
                          const RingPoly& a, const CipherParams& params,
                          Rng& rng);
// Deterministic variant with caller-chosen error (tests, error ledgers).
RlweCiphertext sk_encrypt_with_error(const SecretKey& sk, const RingPoly& m,
                                     const RingPoly& a, const RingPoly& e,
                                     const CipherParams& params);

// b = c0 + c1*sk, then per-coefficient round(centered(b)/delta) mod p. Wrong
// plaintexts come out silently when the error budget is violated; callers
// enforce the budget.
RingPoly decrypt(const SecretKey& sk, const RlweCiphertext& ct,
                 const CipherParams& params);

// c0 := sum_i w_i * cts_i.c0 over ciphertexts sharing one c1; decrypts under
// the correspondingly weighted key sum. Weights enter as integers; the
// protocol layer passes Lagrange values reduced mod p (bounded by p-1).
RlweCiphertext combine_weighted(const std::vector<RlweCiphertext>& cts,
                                const std::vector<BigInt>& weights);
RlweCiphertext combine_weighted(std::span<const RlweCiphertext* const> cts,
                                const std::vector<BigInt>& weights);

}  // namespace rlwe
}  // namespace atss

#endif  // ATSS_RLWE_HPP_
