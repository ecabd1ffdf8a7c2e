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

#ifndef ATSS_THFHE_HPP_
#define ATSS_THFHE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "atss/approx.hpp"
#include "atss/harness.hpp"
#include "atss/ring.hpp"
#include "atss/rng.hpp"

namespace atss {
namespace thfhe {

// End-to-end T-out-of-N threshold decryption over a pluggable approximate
// secret sharing backend: local key generation and key sharing in the setup
// stage, collective public key, BFV-style encryption with additive
// evaluation, and the three-phase decryption protocol.

struct OuterParams {
  size_t degree = 0;        // ring degree M
  Modulus q;                // ciphertext modulus Q (the backend message space)
  Modulus p;                // plaintext modulus P
  BigInt delta = 0;         // floor(Q/P)
  BigInt noise_bound = 0;   // B: sampler bound for key and encryption errors
  BigInt fresh_bound = 0;   // analytic fresh-ciphertext error bound
  BigInt eval_bound = 0;    // B_CT for the planned additive width
  BigInt smudge_bound = 0;  // B_sm
  uint32_t n = 0;
  uint32_t t = 0;
  uint32_t additions = 1;  // ciphertexts summed before decryption

  // Computes delta, the fresh bound M(N+1)B + B (ternary u and sk expand a
  // degree-M product by up to M), B_CT = additions * fresh bound, and checks
  // the decryption budget.
  static OuterParams derive(size_t degree, Modulus q, Modulus p,
                            BigInt noise_bound, BigInt smudge_bound, uint32_t n,
                            uint32_t t, uint32_t additions);
  // approx_bound: the backend's M_B. Default pins the budget against the
  // ATASSES bound T * B_sm.
  void validate(const BigInt& approx_bound) const;
  void validate() const;
};

struct Ciphertext {
  RingPoly c0;
  RingPoly c1;
};

struct PublicKey {
  RingPoly p0;  // -a * (sum sk_i) + key noise
  RingPoly p1;  // a
};

// Builds a backend instance of the chosen family for a given message length;
// the pipeline needs one instance at length M for key sharing and one at
// length C*M for decryption recovery.
using BackendFactory =
    std::function<std::unique_ptr<ApproxScheme>(size_t msg_len)>;

struct KeyMaterial {
  std::vector<RingPoly> local_keys;       // sk_i, ternary mod Q (simulator view)
  std::vector<PartyShare> global_shares;  // party i's share of sum_j sk_j
  PublicKey pk;
  std::vector<RingPoly> pk_noises;        // e_i of each party's pk contribution
};

// Smallest prime above 2 P (B_CT + T B_sm) * slack that also supports the
// NTT (q ≡ 1 mod 2*degree); the ciphertext modulus search for a planned
// pipeline shape.
BigInt find_outer_modulus(size_t degree, const Modulus& p,
                          const BigInt& noise_bound, const BigInt& smudge_bound,
                          uint32_t n, uint32_t t, uint32_t additions);

// Backend factory builders. The backend message space is the pipeline's
// ciphertext space; for the cleared-denominator scheme that forces the huge
// modulus, so its pipeline instantiation derives q from the scheme bound.
BackendFactory atasses_backend(const OuterParams& params, size_t inner_degree,
                               BigInt inner_noise_bound, uint64_t crs_seed);
BackendFactory replicated_backend(const OuterParams& params);
BackendFactory type2_backend(const OuterParams& params);
BackendFactory type1_backend(const OuterParams& params);

// Outer parameters for a type-1 backed pipeline: q becomes the smallest
// prime covering both the scheme's noise range and the decryption budget.
OuterParams derive_type1_outer(size_t degree, Modulus p, BigInt noise_bound,
                               BigInt smudge_bound, uint32_t n, uint32_t t,
                               uint32_t additions);

// ---- setup ------------------------------------------------------------------

RingPoly keygen_local(Rng& rng, const OuterParams& params);

// Every party shares its local key through the backend and sums the received
// shares: the result is a backend sharing of sk = sum_i sk_i. Requires all N
// parties (setup-stage assumption).
std::vector<PartyShare> sk_share(const ApproxScheme& key_scheme,
                                 const std::vector<RingPoly>& local_keys,
                                 Rng& rng);

// Single-round CRS protocol: party i publishes p_{0,i} = -a*sk_i + e_i and
// pk = (sum_i p_{0,i}, a).
struct PkGenResult {
  PublicKey pk;
  std::vector<RingPoly> noises;
};
PkGenResult collective_pkgen(const std::vector<RingPoly>& local_keys,
                             const RingPoly& crs_a, const OuterParams& params,
                             Rng& rng);

KeyMaterial setup(const ApproxScheme& key_scheme, const OuterParams& params,
                  Rng& rng);

// ---- encryption and evaluation ----------------------------------------------

Ciphertext pk_encrypt(const PublicKey& pk, const RingPoly& m,
                      const OuterParams& params, Rng& rng);
Ciphertext pk_encrypt_with(const PublicKey& pk, const RingPoly& m,
                           const RingPoly& u, const RingPoly& e0,
                           const RingPoly& e1, const OuterParams& params);

Ciphertext eval_add(const std::vector<Ciphertext>& cts);

// ---- decryption -------------------------------------------------------------

// b_i = c_{c,1} * keyShare_i + c_{c,0} per ciphertext, concatenated into a
// length C*M share of the backend's recovery message. The additive c0 term
// follows the backend's piece structure (every piece for Shamir-style
// schemes, one designated piece for replicated).
PartyShare dec_phase1(const ApproxScheme& rec_scheme, const OuterParams& params,
                      const std::vector<Ciphertext>& cts,
                      const PartyShare& key_share);

// Approximate recovery of b = Delta*m + e_CT under the simulation harness.
sim::RunResult dec_phase2(const ApproxScheme& rec_scheme,
                          std::vector<PartyShare> shares,
                          const sim::DropoutSchedule& dropout, uint64_t seed);

// Decode each length-M block of b' by rounding; c0 entered in phase 1.
std::vector<RingPoly> dec_phase3(const RingPoly& b_prime,
                                 const OuterParams& params);

// ---- smudging desk check ----------------------------------------------------

struct Rational {
  BigInt num = 0;
  BigInt den = 1;
  bool operator==(const Rational& o) const {
    return num * o.den == o.num * den;
  }
};

// Exact total-variation distance between Uniform[-B2,B2] and its shift by the
// worst-case |e1| <= B1: equals B1 / (2 B2 + 1). Requires B1 <= B2.
Rational smudging_tv_distance(const BigInt& b1, const BigInt& b2);

// ---- convenience driver -----------------------------------------------------

struct DecryptOutcome {
  bool aborted = false;
  std::string abort_reason;
  std::vector<RingPoly> plaintexts;
  sim::RunResult run;
};

class Pipeline {
 public:
  Pipeline(OuterParams params, BackendFactory factory);

  const OuterParams& params() const { return params_; }
  const ApproxScheme& key_scheme() const { return *key_scheme_; }

  KeyMaterial run_setup(Rng& rng) const;
  DecryptOutcome decrypt(const KeyMaterial& keys,
                         const std::vector<Ciphertext>& cts,
                         const sim::DropoutSchedule& dropout,
                         uint64_t seed) const;

 private:
  OuterParams params_;
  BackendFactory factory_;
  std::unique_ptr<ApproxScheme> key_scheme_;  // message length M
};

}  // namespace thfhe
}  // namespace atss

#endif  // ATSS_THFHE_HPP_
