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

#ifndef ATSS_ATASSES_HPP_
#define ATSS_ATASSES_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "atss/approx.hpp"
#include "atss/rlwe.hpp"
#include "atss/shamir.hpp"

namespace atss {
namespace atasses {

// Two-round approximate recovery that protects Shamir shares with
// key-homomorphic RLWE encryption instead of additive noise. Round 1: each
// participant freshly generates two encryption keys, Shamir-shares them to
// all parties, and uploads encryptions of its message-share chunks and of a
// smudging noise under a CRS-derived common polynomial. Round 2: every party
// combines the key shares it received with the broadcast recovery weights
// into one decryption-key share; the aggregator reconstructs the decryption
// key, combines the ciphertexts, and decrypts the approximate message.
struct Config {
  uint32_t n = 0;
  uint32_t t = 0;
  Modulus msg_mod;             // message modulus P_msg = P'
  size_t msg_len = 0;          // K
  rlwe::CipherParams cipher;   // inner cipher; cipher.p must equal msg_mod
  BigInt smudge_bound = 0;     // B_sm
  uint64_t crs_seed = 0;
  bool use_all_round1 = false;  // take every complete round-1 arrival as T

  size_t chunk_count() const;  // C' = ceil(K / M')
  void validate() const;
};

// Convenience constructor: derives the inner ciphertext modulus by search.
Config make_config(uint32_t n, uint32_t t, const Modulus& msg_mod,
                   size_t msg_len, size_t cipher_degree,
                   const BigInt& cipher_noise_bound, const BigInt& smudge_bound,
                   uint64_t crs_seed);

// CRS polynomial a_k for chunk k: all parties derive it locally.
RingPoly crs_polynomial(const Config& config, uint64_t session_id, size_t k);

struct Round1PartyMsg {
  // Key-share material for party j sits at index j-1.
  std::vector<shamir::Share> ek_shares1;
  std::vector<shamir::Share> ek_shares2;
  // Ciphertext pairs per chunk k: encryption of the share chunk and of the
  // noise chunk, both under the same a_k.
  std::vector<rlwe::RlweCiphertext> share_cts;
  std::vector<rlwe::RlweCiphertext> noise_cts;
};

struct Round2PartyMsg {
  shamir::Share dk_share;
};

// Retained party state between rounds.
struct PartyState {
  uint32_t id = 0;
  std::map<uint32_t, shamir::Share> recv_ek1;  // sender -> share for me
  std::map<uint32_t, shamir::Share> recv_ek2;
  RingPoly smudge;  // injected noise, length K, mod P' (logged for oracles)
};

Round1PartyMsg party_round1(const Config& config, uint32_t party,
                            const RingPoly& message_share, uint64_t session_id,
                            Rng& rng, PartyState& state);

// Recovery weights for the participant set: Lagrange coefficients computed in
// Z_{P'}; their canonical integer values (bounded by P'-1) are what both the
// key combination over Z_{Q'} and the ciphertext combination use.
shamir::LagrangeSet aggregator_round1(const Config& config,
                                      const std::vector<uint32_t>& arrivals);

Round2PartyMsg party_round2(const Config& config, const PartyState& state,
                            const shamir::LagrangeSet& weights);

// dk from any >= T round-2 shares (Lagrange over Z_{Q'}), then per chunk
// CTall_k = sum_i (l_i * CTs_{i,k}[0] + CTn_{i,k}[0]) decrypted under dk;
// chunks concatenate to the approximate message with padding dropped.
RingPoly aggregator_round2(
    const Config& config,
    const std::map<uint32_t, Round1PartyMsg>& round1_from_t,
    const shamir::LagrangeSet& weights,
    const std::vector<shamir::Share>& dk_shares);

// Direct in-memory run over all parties without dropouts; bit-identical to a
// harness session with an empty schedule.
RingPoly run_direct(const Config& config,
                    const std::vector<shamir::Share>& message_shares,
                    uint64_t session_seed,
                    std::map<uint32_t, RingPoly>* noise_out = nullptr);

// ApproxScheme wrapper used by the harness, benchmarks, and the pipeline.
std::unique_ptr<ApproxScheme> make_scheme(Config config);

}  // namespace atasses
}  // namespace atss

#endif  // ATSS_ATASSES_HPP_
