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

#ifndef ATSS_BASELINES_HPP_
#define ATSS_BASELINES_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "atss/approx.hpp"

namespace atss {
namespace baselines {

// Comparison schemes behind the common ApproxScheme interface. All add
// bounded noise to shares before recovery ("noisy share"); they differ in how
// the recovery coefficients are kept from blowing the noise up.

// Replicated {0,1}-linear secret sharing: the secret splits into C(N, T-1)
// additive parts indexed by (T-1)-subsets; party i holds the parts of every
// subset not containing i. Recovery picks each part once from its
// lowest-indexed holder, so unit weights bound the noise by C(N, T-1) * B_sm.
// One round. Piece counts explode with N; refuses N > 20.
struct ReplicatedConfig {
  uint32_t n = 0;
  uint32_t t = 0;
  Modulus msg_mod;
  size_t msg_len = 0;
  BigInt smudge_bound = 0;

  void validate() const;
};
std::unique_ptr<ApproxScheme> make_replicated(ReplicatedConfig config);

// (T-1)-subsets of {1..n} in lexicographic order; the piece label space.
std::vector<std::vector<uint32_t>> subset_labels(uint32_t n, uint32_t t);

// Shamir sharing over an enlarged modulus P1 with "cleared denominators":
// parties scale their noise by N!, recovery weights are the exact integers
// N! * L_i, and the recovered N! * (m + noise) is divided by N! afterwards.
// Noise stays under N * (N!)^3 * B_sm at the price of the huge message
// space, which is the scheme's whole drawback. One round.
struct Type1Config {
  uint32_t n = 0;
  uint32_t t = 0;
  Modulus msg_mod;  // P1; the scheme's own message space
  size_t msg_len = 0;
  BigInt smudge_bound = 0;

  void validate() const;
};
std::unique_ptr<ApproxScheme> make_type1(Type1Config config);

// Smallest prime above max(2 N (N!)^3 B_sm, at_least).
BigInt type1_modulus(uint32_t n, const BigInt& smudge_bound,
                     const BigInt& at_least);

// Exact integer N! * L_i for the participant set (points within 1..N).
BigInt type1_weight(const std::vector<uint32_t>& points, size_t index,
                    uint32_t n);

// Coordinated noise: round 1 Shamir-shares a fresh length-K noise from every
// party, so the per-party noise sums are themselves shares of one bounded
// value; round 2 submits noisy shares and recovery sees noise at most
// N * B_sm. Communication grows with N*K.
struct Type2Config {
  uint32_t n = 0;
  uint32_t t = 0;
  Modulus msg_mod;
  size_t msg_len = 0;
  BigInt smudge_bound = 0;

  void validate() const;
};
std::unique_ptr<ApproxScheme> make_type2(Type2Config config);

}  // namespace baselines
}  // namespace atss

#endif  // ATSS_BASELINES_HPP_
