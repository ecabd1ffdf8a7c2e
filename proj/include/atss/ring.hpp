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

#ifndef ATSS_RING_HPP_
#define ATSS_RING_HPP_

#include <cstdint>
#include <vector>

#include "atss/bigint.hpp"
#include "atss/modulus.hpp"
#include "atss/rng.hpp"

namespace atss {

// Coefficient vector over Z_q. Doubles as an element of the negacyclic ring
// R_{n,q} = Z_q[x]/(x^n + 1) when n is a power of two (poly_mul enforces it)
// and as a flat residue vector elsewhere (messages, shares, concatenations).
// Coefficients are always kept fully reduced in [0, q); centered lifts happen
// only inside inf_norm and decode_round.
class RingPoly {
 public:
  RingPoly() = default;
  RingPoly(Modulus q, size_t n);

  size_t size() const { return n_; }
  const Modulus& modulus() const { return q_; }
  bool single_word() const { return q_.single_word(); }

  uint64_t* words() { return w_.data(); }
  const uint64_t* words() const { return w_.data(); }
  std::vector<BigInt>& bigs() { return b_; }
  const std::vector<BigInt>& bigs() const { return b_; }

  BigInt coeff(size_t i) const;
  int64_t coeff_centered(size_t i) const;  // single-word only
  void set_coeff(size_t i, const BigInt& v);
  void set_coeff_u64(size_t i, uint64_t v);

  bool is_zero() const;
  bool operator==(const RingPoly& o) const;
  bool operator!=(const RingPoly& o) const { return !(*this == o); }

 private:
  Modulus q_;
  size_t n_ = 0;
  std::vector<uint64_t> w_;  // used iff q_.single_word()
  std::vector<BigInt> b_;    // otherwise
};

// ---- arithmetic -----------------------------------------------------------

RingPoly poly_add(const RingPoly& a, const RingPoly& b);
RingPoly poly_sub(const RingPoly& a, const RingPoly& b);
RingPoly poly_neg(const RingPoly& a);
RingPoly poly_scalar_mul(const BigInt& c, const RingPoly& a);

// acc += c * a
void add_scaled(RingPoly& acc, const BigInt& c, const RingPoly& a);
// acc = acc * x + next (the Horner step behind multi-point evaluation)
void horner_step(RingPoly& acc, const BigInt& x, const RingPoly& next);

// Negacyclic product in R_{n,q}; n must be a power of two. Dispatches to the
// NTT when q is an NTT-friendly single-word prime, else to schoolbook.
RingPoly poly_mul(const RingPoly& a, const RingPoly& b);

// max_i |centered(a_i)|
BigInt inf_norm(const RingPoly& a);

// ---- sampling -------------------------------------------------------------

// i.i.d. uniform coefficients on [0, q).
RingPoly sample_uniform(Rng& rng, size_t n, const Modulus& q);

// i.i.d. uniform on [-B, B] before reduction; requires 2B + 1 <= q.
RingPoly sample_bounded(Rng& rng, size_t n, const Modulus& q, const BigInt& B);

// Smudging variant of sample_bounded: same distribution when 2B + 1 <= q but
// also accepts larger B by reducing the integer draw mod q (B_sm may exceed
// q/2, e.g. B_sm = 2^16 against message modulus 65537).
RingPoly sample_smudging(Rng& rng, size_t n, const Modulus& q, const BigInt& B);

// i.i.d. uniform over {-1, 0, 1} represented in [0, q).
RingPoly sample_ternary(Rng& rng, size_t n, const Modulus& q);

// ---- encode / decode ------------------------------------------------------

// Per coefficient: centered-lift b_i, output round(b_i / delta) mod p.
// Rounds half away from zero upward; exact iff the error norm < delta/2.
RingPoly decode_round(const RingPoly& b, const BigInt& delta, const Modulus& p);

// delta * least-nonnegative-lift(m) as an element mod q.
RingPoly lift_scale(const RingPoly& m, const BigInt& delta, const Modulus& q);

// Change of representation helpers.
RingPoly chunk_of(const RingPoly& v, size_t offset, size_t len);  // zero-padded
RingPoly concat(const std::vector<RingPoly>& parts, size_t keep_len);
RingPoly convert_mod(const RingPoly& v, const Modulus& to);  // lift then reduce

}  // namespace atss

#endif  // ATSS_RING_HPP_
