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

#ifndef ATSS_RING_KERNELS_HPP_
#define ATSS_RING_KERNELS_HPP_

#include <cstdint>
#include <vector>

#include "atss/ring.hpp"

// Data-parallel inner loops behind the ring API. The omp namespace holds the
// OpenMP kernels used in production paths; the serial namespace keeps plain
// reference implementations of the same loops for tests and for the
// kernel_bench comparison target.

namespace atss {
namespace serial {

// c = a * b mod (x^n + 1, q), O(n^2) with explicit x^n = -1 folding.
RingPoly negacyclic_mul(const RingPoly& a, const RingPoly& b);

BigInt inf_norm(const RingPoly& a);

// Shamir multi-point evaluation: given secret vector s and uniformly random
// higher coefficient vectors r_1..r_{T-1} (all length L), return for every
// point x the vector s + sum_t r_t x^t.
std::vector<RingPoly> multipoint_eval(const RingPoly& secret,
                                      const std::vector<RingPoly>& randoms,
                                      const std::vector<uint64_t>& points);

}  // namespace serial

namespace par {

RingPoly negacyclic_mul(const RingPoly& a, const RingPoly& b);

BigInt inf_norm(const RingPoly& a);

std::vector<RingPoly> multipoint_eval(const RingPoly& secret,
                                      const std::vector<RingPoly>& randoms,
                                      const std::vector<uint64_t>& points);

}  // namespace par
}  // namespace atss

#endif  // ATSS_RING_KERNELS_HPP_
