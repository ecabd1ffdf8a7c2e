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

#ifndef ATSS_SHAMIR_HPP_
#define ATSS_SHAMIR_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "atss/ring.hpp"
#include "atss/rng.hpp"

namespace atss {
namespace shamir {

// T-out-of-N Shamir sharing of residue vectors, coefficient-wise. Party i sits
// at evaluation point x_i = i (1-based); the share modulus must be prime (or
// at least leave every pairwise point difference invertible) and exceed N.
struct Share {
  uint32_t point = 0;  // nonzero evaluation point
  RingPoly payload;
};

// Interpolation weights at zero for one participant set:
// L_i = prod_{j != i} x_j / (x_j - x_i).
struct LagrangeSet {
  Modulus mod;
  std::vector<uint32_t> points;
  std::vector<BigInt> coeffs;  // parallel to points

  const BigInt& at(uint32_t point) const;
};

// Sample, per coefficient position, a degree-(T-1) polynomial with the secret
// as constant term and uniform higher coefficients; share i evaluates it at
// x_i. Realized by drawing T-1 uniform coefficient vectors, which is the same
// distribution.
std::vector<Share> share(const RingPoly& secret, uint32_t n, uint32_t t,
                         const std::vector<uint32_t>& points, Rng& rng);
std::vector<Share> share(const RingPoly& secret, uint32_t n, uint32_t t,
                         Rng& rng);  // points 1..n

LagrangeSet lagrange_coeffs(const std::vector<uint32_t>& points,
                            const Modulus& q);

// Exact reconstruction from >= t shares at distinct points.
RingPoly rec(const std::vector<Share>& shares, uint32_t t);

// Weighted sum of shares held at one common point; a share of the
// correspondingly weighted secret combination.
Share linear_combine(const std::vector<Share>& shares_at_point,
                     const std::vector<BigInt>& weights);

// Default point assignment for party i.
inline uint32_t point_of(uint32_t party) { return party; }

}  // namespace shamir
}  // namespace atss

#endif  // ATSS_SHAMIR_HPP_
