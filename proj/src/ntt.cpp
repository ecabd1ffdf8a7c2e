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

#include "atss/ntt.hpp"

#include <map>
#include <mutex>

#include "atss/bigint.hpp"
#include "atss/modulus.hpp"

namespace atss {
namespace {

using modops::add;
using modops::mul;
using modops::mul_shoup;
using modops::pow;
using modops::shoup;
using modops::sub;

size_t reverse_bits(size_t v, size_t bits) {
  size_t out = 0;
  for (size_t i = 0; i < bits; ++i) {
    out = (out << 1) | (v & 1);
    v >>= 1;
  }
  return out;
}

// psi: primitive 2n-th root of unity mod q, found via a generator candidate
// raised to (q-1)/2n and checked by psi^n == -1. n a power of two makes the
// order-exactly-2n check collapse to that single condition.
uint64_t find_psi(uint64_t q, size_t n) {
  const uint64_t order = 2 * static_cast<uint64_t>(n);
  const uint64_t exp = (q - 1) / order;
  for (uint64_t g = 2; g < 1000; ++g) {
    const uint64_t psi = pow(g, exp, q);
    if (psi != 0 && pow(psi, n, q) == q - 1) return psi;
  }
  return 0;
}

struct PlanKey {
  uint64_t q;
  size_t n;
  bool operator<(const PlanKey& o) const {
    return q != o.q ? q < o.q : n < o.n;
  }
};

std::mutex g_plan_mutex;
std::map<PlanKey, std::shared_ptr<const NttPlan>> g_plans;

}  // namespace

NttPlan::NttPlan(uint64_t q, size_t n, uint64_t psi) : q_(q), n_(n) {
  while ((size_t{1} << log_n_) < n) ++log_n_;
  tw_.resize(n);
  tw_shoup_.resize(n);
  itw_.resize(n);
  itw_shoup_.resize(n);
  const uint64_t psi_inv = modops::inv(psi, q);
  uint64_t p = 1, pi = 1;
  std::vector<uint64_t> pow_psi(n), pow_psi_inv(n);
  for (size_t i = 0; i < n; ++i) {
    pow_psi[i] = p;
    pow_psi_inv[i] = pi;
    p = mul(p, psi, q);
    pi = mul(pi, psi_inv, q);
  }
  for (size_t i = 0; i < n; ++i) {
    const size_t r = reverse_bits(i, log_n_);
    tw_[i] = pow_psi[r];
    itw_[i] = pow_psi_inv[r];
    tw_shoup_[i] = shoup(tw_[i], q);
    itw_shoup_[i] = shoup(itw_[i], q);
  }
  n_inv_ = modops::inv(static_cast<uint64_t>(n), q);
  n_inv_shoup_ = shoup(n_inv_, q);
}

std::shared_ptr<const NttPlan> NttPlan::get(uint64_t q, size_t n) {
  if (n < 2 || (n & (n - 1)) != 0) return nullptr;
  if (q < 3 || q >= (uint64_t{1} << 62)) return nullptr;
  if ((q - 1) % (2 * static_cast<uint64_t>(n)) != 0) return nullptr;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = g_plans.find({q, n});
  if (it != g_plans.end()) return it->second;
  if (!is_probable_prime(from_u64(q))) {
    g_plans.emplace(PlanKey{q, n}, nullptr);
    return nullptr;
  }
  const uint64_t psi = find_psi(q, n);
  if (psi == 0) {
    g_plans.emplace(PlanKey{q, n}, nullptr);
    return nullptr;
  }
  auto plan = std::shared_ptr<const NttPlan>(new NttPlan(q, n, psi));
  g_plans.emplace(PlanKey{q, n}, plan);
  return plan;
}

void NttPlan::forward(uint64_t* a) const {
  size_t t = n_ >> 1;
  for (size_t m = 1; m < n_; m <<= 1) {
    for (size_t i = 0; i < m; ++i) {
      const size_t j1 = 2 * i * t;
      const uint64_t w = tw_[m + i];
      const uint64_t ws = tw_shoup_[m + i];
      for (size_t j = j1; j < j1 + t; ++j) {
        const uint64_t x = a[j];
        const uint64_t y = mul_shoup(a[j + t], w, ws, q_);
        a[j] = add(x, y, q_);
        a[j + t] = sub(x, y, q_);
      }
    }
    t >>= 1;
  }
}

void NttPlan::inverse(uint64_t* a) const {
  size_t t = 1;
  for (size_t m = n_ >> 1; m >= 1; m >>= 1) {
    size_t j1 = 0;
    for (size_t i = 0; i < m; ++i) {
      const uint64_t w = itw_[m + i];
      const uint64_t ws = itw_shoup_[m + i];
      for (size_t j = j1; j < j1 + t; ++j) {
        const uint64_t x = a[j];
        const uint64_t y = a[j + t];
        a[j] = add(x, y, q_);
        a[j + t] = mul_shoup(sub(x, y, q_), w, ws, q_);
      }
      j1 += 2 * t;
    }
    t <<= 1;
  }
  for (size_t i = 0; i < n_; ++i) {
    a[i] = mul_shoup(a[i], n_inv_, n_inv_shoup_, q_);
  }
}

void NttPlan::pointwise(const uint64_t* a, const uint64_t* b,
                        uint64_t* c) const {
  for (size_t i = 0; i < n_; ++i) c[i] = mul(a[i], b[i], q_);
}

}  // namespace atss
