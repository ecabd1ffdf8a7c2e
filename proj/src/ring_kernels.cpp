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

#include "atss/ring_kernels.hpp"

#include <algorithm>

#include "atss/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace atss {
namespace {

// Output coefficient k of the negacyclic product: sum over i+j = k minus the
// wrapped sum over i+j = k+n.
uint64_t mul_coeff_u64(const uint64_t* a, const uint64_t* b, size_t n, size_t k,
                       uint64_t q) {
  unsigned __int128 pos = 0, neg = 0;
  int budget = 15;  // products < 2^124, so reduce every 15 accumulations
  for (size_t i = 0; i <= k; ++i) {
    pos += static_cast<unsigned __int128>(a[i]) * b[k - i];
    if (--budget == 0) {
      pos %= q;
      budget = 15;
    }
  }
  budget = 15;
  for (size_t i = k + 1; i < n; ++i) {
    neg += static_cast<unsigned __int128>(a[i]) * b[k + n - i];
    if (--budget == 0) {
      neg %= q;
      budget = 15;
    }
  }
  const uint64_t p = static_cast<uint64_t>(pos % q);
  const uint64_t m = static_cast<uint64_t>(neg % q);
  return modops::sub(p, m, q);
}

BigInt mul_coeff_big(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                     size_t n, size_t k, const BigInt& q) {
  BigInt acc = 0;
  for (size_t i = 0; i <= k; ++i) {
    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
  }
  for (size_t i = k + 1; i < n; ++i) {
    mpz_submul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k + n - i].get_mpz_t());
  }
  return mod_reduce(acc, q);
}

void check_operands(const RingPoly& a, const RingPoly& b) {
  if (a.modulus() != b.modulus() || a.size() != b.size()) {
    throw ParamError("operand mismatch");
  }
}

// One evaluation point: out = ((r_{T-1} x + r_{T-2}) x + ...) x + secret.
void eval_point(const RingPoly& secret, const std::vector<RingPoly>& randoms,
                uint64_t x, RingPoly& out) {
  if (randoms.empty()) {
    out = secret;
    return;
  }
  out = randoms.back();
  const BigInt xv = from_u64(x);
  for (size_t t = randoms.size(); t-- > 1;) {
    horner_step(out, xv, randoms[t - 1]);
  }
  horner_step(out, xv, secret);
}

}  // namespace

namespace serial {

RingPoly negacyclic_mul(const RingPoly& a, const RingPoly& b) {
  check_operands(a, b);
  const size_t n = a.size();
  RingPoly c(a.modulus(), n);
  if (a.single_word()) {
    const uint64_t q = a.modulus().u64();
    for (size_t k = 0; k < n; ++k) {
      c.words()[k] = mul_coeff_u64(a.words(), b.words(), n, k, q);
    }
  } else {
    const BigInt& q = a.modulus().value();
    for (size_t k = 0; k < n; ++k) {
      c.bigs()[k] = mul_coeff_big(a.bigs(), b.bigs(), n, k, q);
    }
  }
  return c;
}

BigInt inf_norm(const RingPoly& a) {
  if (a.single_word()) {
    uint64_t best = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      const int64_t v = a.modulus().center_u64(a.words()[i]);
      const uint64_t av = static_cast<uint64_t>(v < 0 ? -v : v);
      if (av > best) best = av;
    }
    return from_u64(best);
  }
  BigInt best = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    BigInt v = abs(a.modulus().center(a.bigs()[i]));
    if (v > best) best = v;
  }
  return best;
}

std::vector<RingPoly> multipoint_eval(const RingPoly& secret,
                                      const std::vector<RingPoly>& randoms,
                                      const std::vector<uint64_t>& points) {
  std::vector<RingPoly> out(points.size());
  for (size_t p = 0; p < points.size(); ++p) {
    eval_point(secret, randoms, points[p], out[p]);
  }
  return out;
}

}  // namespace serial

namespace par {

RingPoly negacyclic_mul(const RingPoly& a, const RingPoly& b) {
  check_operands(a, b);
  const size_t n = a.size();
  RingPoly c(a.modulus(), n);
  if (a.single_word()) {
    const uint64_t q = a.modulus().u64();
    uint64_t* cw = c.words();
    const uint64_t* aw = a.words();
    const uint64_t* bw = b.words();
#pragma omp parallel for schedule(static) if (n >= 256)
    for (size_t k = 0; k < n; ++k) {
      cw[k] = mul_coeff_u64(aw, bw, n, k, q);
    }
  } else {
    const BigInt& q = a.modulus().value();
#pragma omp parallel for schedule(static) if (n >= 64)
    for (size_t k = 0; k < n; ++k) {
      c.bigs()[k] = mul_coeff_big(a.bigs(), b.bigs(), n, k, q);
    }
  }
  return c;
}

BigInt inf_norm(const RingPoly& a) {
  if (a.single_word()) {
    const size_t n = a.size();
    const uint64_t* w = a.words();
    uint64_t best = 0;
#pragma omp parallel for schedule(static) reduction(max : best) \
    if (n >= 8192)
    for (size_t i = 0; i < n; ++i) {
      const int64_t v = a.modulus().center_u64(w[i]);
      const uint64_t av = static_cast<uint64_t>(v < 0 ? -v : v);
      if (av > best) best = av;
    }
    return from_u64(best);
  }
  return serial::inf_norm(a);
}

std::vector<RingPoly> multipoint_eval(const RingPoly& secret,
                                      const std::vector<RingPoly>& randoms,
                                      const std::vector<uint64_t>& points) {
  std::vector<RingPoly> out(points.size());
  const size_t work = points.size() * secret.size();
#pragma omp parallel for schedule(static) if (work >= 16384)
  for (size_t p = 0; p < points.size(); ++p) {
    eval_point(secret, randoms, points[p], out[p]);
  }
  return out;
}

}  // namespace par
}  // namespace atss
