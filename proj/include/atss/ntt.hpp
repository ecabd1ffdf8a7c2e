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

#ifndef ATSS_NTT_HPP_
#define ATSS_NTT_HPP_

#include <cstdint>
#include <memory>
#include <vector>

namespace atss {

// Negacyclic number-theoretic transform over a single-word prime q with
// q ≡ 1 (mod 2n). The 2n-th root of unity is merged into the twiddle tables,
// so pointwise products between forward transforms realize multiplication
// modulo x^n + 1 directly.
class NttPlan {
 public:
  // Shared plan from the process-wide cache; nullptr when q does not support
  // the transform (not prime, too large, or 2n does not divide q - 1).
  static std::shared_ptr<const NttPlan> get(uint64_t q, size_t n);

  void forward(uint64_t* a) const;   // natural -> bit-reversed order
  void inverse(uint64_t* a) const;   // bit-reversed -> natural order
  void pointwise(const uint64_t* a, const uint64_t* b, uint64_t* c) const;

  uint64_t modulus() const { return q_; }
  size_t size() const { return n_; }

 private:
  NttPlan(uint64_t q, size_t n, uint64_t psi);

  uint64_t q_ = 0;
  size_t n_ = 0;
  size_t log_n_ = 0;
  std::vector<uint64_t> tw_, tw_shoup_;    // forward twiddles, bitrev layout
  std::vector<uint64_t> itw_, itw_shoup_;  // inverse twiddles
  uint64_t n_inv_ = 0, n_inv_shoup_ = 0;
};

}  // namespace atss

#endif  // ATSS_NTT_HPP_
