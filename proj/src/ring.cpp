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

#include "atss/ring.hpp"

#include <algorithm>

#include "atss/errors.hpp"
#include "atss/ntt.hpp"
#include "atss/ring_kernels.hpp"

namespace atss {
namespace {

void require_same_ring(const RingPoly& a, const RingPoly& b) {
  if (a.modulus() != b.modulus()) throw ParamError("modulus mismatch");
  if (a.size() != b.size()) throw ParamError("length mismatch");
}

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

RingPoly::RingPoly(Modulus q, size_t n) : q_(std::move(q)), n_(n) {
  if (q_.single_word()) {
    w_.assign(n, 0);
  } else {
    b_.assign(n, BigInt(0));
  }
}

BigInt RingPoly::coeff(size_t i) const {
  return single_word() ? from_u64(w_[i]) : b_[i];
}

int64_t RingPoly::coeff_centered(size_t i) const {
  return q_.center_u64(w_[i]);
}

void RingPoly::set_coeff(size_t i, const BigInt& v) {
  BigInt r = mod_reduce(v, q_.value());
  if (single_word()) {
    w_[i] = to_u64(r);
  } else {
    b_[i] = std::move(r);
  }
}

void RingPoly::set_coeff_u64(size_t i, uint64_t v) {
  if (single_word()) {
    w_[i] = v % q_.u64();
  } else {
    b_[i] = from_u64(v);
  }
}

bool RingPoly::is_zero() const {
  if (single_word()) {
    return std::all_of(w_.begin(), w_.end(), [](uint64_t c) { return c == 0; });
  }
  return std::all_of(b_.begin(), b_.end(), [](const BigInt& c) { return c == 0; });
}

bool RingPoly::operator==(const RingPoly& o) const {
  return q_ == o.q_ && n_ == o.n_ && w_ == o.w_ && b_ == o.b_;
}

// ---- arithmetic -----------------------------------------------------------

RingPoly poly_add(const RingPoly& a, const RingPoly& b) {
  require_same_ring(a, b);
  RingPoly c(a.modulus(), a.size());
  if (a.single_word()) {
    const uint64_t q = a.modulus().u64();
    for (size_t i = 0; i < a.size(); ++i) {
      c.words()[i] = modops::add(a.words()[i], b.words()[i], q);
    }
  } else {
    const BigInt& q = a.modulus().value();
    for (size_t i = 0; i < a.size(); ++i) {
      BigInt s = a.bigs()[i] + b.bigs()[i];
      if (s >= q) s -= q;
      c.bigs()[i] = std::move(s);
    }
  }
  return c;
}

RingPoly poly_sub(const RingPoly& a, const RingPoly& b) {
  require_same_ring(a, b);
  RingPoly c(a.modulus(), a.size());
  if (a.single_word()) {
    const uint64_t q = a.modulus().u64();
    for (size_t i = 0; i < a.size(); ++i) {
      c.words()[i] = modops::sub(a.words()[i], b.words()[i], q);
    }
  } else {
    const BigInt& q = a.modulus().value();
    for (size_t i = 0; i < a.size(); ++i) {
      BigInt s = a.bigs()[i] - b.bigs()[i];
      if (s < 0) s += q;
      c.bigs()[i] = std::move(s);
    }
  }
  return c;
}

RingPoly poly_neg(const RingPoly& a) {
  RingPoly c(a.modulus(), a.size());
  if (a.single_word()) {
    const uint64_t q = a.modulus().u64();
    for (size_t i = 0; i < a.size(); ++i) {
      c.words()[i] = modops::neg(a.words()[i], q);
    }
  } else {
    const BigInt& q = a.modulus().value();
    for (size_t i = 0; i < a.size(); ++i) {
      c.bigs()[i] = a.bigs()[i] == 0 ? BigInt(0) : BigInt(q - a.bigs()[i]);
    }
  }
  return c;
}

RingPoly poly_scalar_mul(const BigInt& c, const RingPoly& a) {
  RingPoly out(a.modulus(), a.size());
  if (a.single_word()) {
    const uint64_t q = a.modulus().u64();
    const uint64_t cw = to_u64(mod_reduce(c, a.modulus().value()));
    const uint64_t cs = modops::shoup(cw, q);
    for (size_t i = 0; i < a.size(); ++i) {
      out.words()[i] = modops::mul_shoup(a.words()[i], cw, cs, q);
    }
  } else {
    const BigInt& q = a.modulus().value();
    const BigInt cr = mod_reduce(c, q);
    BigInt t;
    for (size_t i = 0; i < a.size(); ++i) {
      t = cr * a.bigs()[i];
      mpz_mod(out.bigs()[i].get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
    }
  }
  return out;
}

void add_scaled(RingPoly& acc, const BigInt& c, const RingPoly& a) {
  require_same_ring(acc, a);
  if (acc.single_word()) {
    const uint64_t q = acc.modulus().u64();
    const uint64_t cw = to_u64(mod_reduce(c, acc.modulus().value()));
    const uint64_t cs = modops::shoup(cw, q);
    for (size_t i = 0; i < acc.size(); ++i) {
      acc.words()[i] = modops::add(
          acc.words()[i], modops::mul_shoup(a.words()[i], cw, cs, q), q);
    }
  } else {
    const BigInt& q = acc.modulus().value();
    const BigInt cr = mod_reduce(c, q);
    BigInt t;
    for (size_t i = 0; i < acc.size(); ++i) {
      t = acc.bigs()[i] + cr * a.bigs()[i];
      mpz_mod(acc.bigs()[i].get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
    }
  }
}

void horner_step(RingPoly& acc, const BigInt& x, const RingPoly& next) {
  require_same_ring(acc, next);
  if (acc.single_word()) {
    const uint64_t q = acc.modulus().u64();
    const uint64_t xw = to_u64(mod_reduce(x, acc.modulus().value()));
    const uint64_t xs = modops::shoup(xw, q);
    for (size_t i = 0; i < acc.size(); ++i) {
      acc.words()[i] = modops::add(
          modops::mul_shoup(acc.words()[i], xw, xs, q), next.words()[i], q);
    }
  } else {
    const BigInt& q = acc.modulus().value();
    const BigInt xr = mod_reduce(x, q);
    BigInt t;
    for (size_t i = 0; i < acc.size(); ++i) {
      t = acc.bigs()[i] * xr + next.bigs()[i];
      mpz_mod(acc.bigs()[i].get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
    }
  }
}

RingPoly poly_mul(const RingPoly& a, const RingPoly& b) {
  require_same_ring(a, b);
  if (!is_pow2(a.size())) {
    throw ParamError("ring degree must be a power of two");
  }
  if (a.single_word()) {
    auto plan = NttPlan::get(a.modulus().u64(), a.size());
    if (plan) {
      RingPoly c(a.modulus(), a.size());
      std::vector<uint64_t> fa(a.words(), a.words() + a.size());
      std::vector<uint64_t> fb(b.words(), b.words() + b.size());
      plan->forward(fa.data());
      plan->forward(fb.data());
      plan->pointwise(fa.data(), fb.data(), c.words());
      plan->inverse(c.words());
      return c;
    }
  }
  return par::negacyclic_mul(a, b);
}

BigInt inf_norm(const RingPoly& a) { return par::inf_norm(a); }

// ---- sampling -------------------------------------------------------------

RingPoly sample_uniform(Rng& rng, size_t n, const Modulus& q) {
  RingPoly out(q, n);
  if (q.single_word()) {
    const uint64_t qv = q.u64();
    for (size_t i = 0; i < n; ++i) out.words()[i] = rng.below_u64(qv);
  } else {
    for (size_t i = 0; i < n; ++i) out.bigs()[i] = rng.below(q.value());
  }
  return out;
}

RingPoly sample_bounded(Rng& rng, size_t n, const Modulus& q, const BigInt& B) {
  if (B < 0) throw ParamError("negative bound");
  if (2 * B + 1 > q.value()) {
    throw ParamError("bound too large for modulus: 2B+1 > q");
  }
  return sample_smudging(rng, n, q, B);
}

RingPoly sample_smudging(Rng& rng, size_t n, const Modulus& q, const BigInt& B) {
  if (B < 0) throw ParamError("negative bound");
  RingPoly out(q, n);
  if (q.single_word() && fits_u64(B) && bit_length(B) <= 60) {
    const uint64_t qv = q.u64();
    const uint64_t bv = to_u64(B);
    for (size_t i = 0; i < n; ++i) {
      const int64_t v = rng.signed_in(bv);
      out.words()[i] =
          v >= 0 ? static_cast<uint64_t>(v) % qv
                 : qv - 1 - ((static_cast<uint64_t>(-(v + 1))) % qv);
    }
  } else {
    for (size_t i = 0; i < n; ++i) {
      out.set_coeff(i, rng.signed_in_big(B));
    }
  }
  return out;
}

RingPoly sample_ternary(Rng& rng, size_t n, const Modulus& q) {
  RingPoly out(q, n);
  for (size_t i = 0; i < n; ++i) {
    const uint64_t t = rng.below_u64(3);  // 0, 1, 2 -> 0, 1, -1
    if (t == 2) {
      out.set_coeff(i, BigInt(-1));
    } else {
      out.set_coeff_u64(i, t);
    }
  }
  return out;
}

// ---- encode / decode ------------------------------------------------------

RingPoly decode_round(const RingPoly& b, const BigInt& delta, const Modulus& p) {
  if (delta < 1) throw ParamError("delta must be positive");
  RingPoly out(p, b.size());
  const BigInt half_delta = delta / 2;
  BigInt t, r;
  for (size_t i = 0; i < b.size(); ++i) {
    t = b.modulus().center(b.coeff(i)) + half_delta;
    mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), delta.get_mpz_t());
    out.set_coeff(i, r);
  }
  return out;
}

RingPoly lift_scale(const RingPoly& m, const BigInt& delta, const Modulus& q) {
  RingPoly out(q, m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    out.set_coeff(i, delta * m.coeff(i));
  }
  return out;
}

RingPoly chunk_of(const RingPoly& v, size_t offset, size_t len) {
  RingPoly out(v.modulus(), len);
  const size_t take = offset < v.size() ? std::min(len, v.size() - offset) : 0;
  if (v.single_word()) {
    std::copy(v.words() + offset, v.words() + offset + take, out.words());
  } else {
    for (size_t i = 0; i < take; ++i) out.bigs()[i] = v.bigs()[offset + i];
  }
  return out;
}

RingPoly concat(const std::vector<RingPoly>& parts, size_t keep_len) {
  if (parts.empty()) throw ParamError("concat of nothing");
  size_t total = 0;
  for (const auto& p : parts) total += p.size();
  RingPoly out(parts[0].modulus(), std::min(total, keep_len));
  size_t at = 0;
  for (const auto& p : parts) {
    if (p.modulus() != parts[0].modulus()) throw ParamError("modulus mismatch");
    for (size_t i = 0; i < p.size() && at < out.size(); ++i, ++at) {
      if (out.single_word()) {
        out.words()[at] = p.words()[i];
      } else {
        out.bigs()[at] = p.bigs()[i];
      }
    }
  }
  return out;
}

RingPoly convert_mod(const RingPoly& v, const Modulus& to) {
  RingPoly out(to, v.size());
  for (size_t i = 0; i < v.size(); ++i) out.set_coeff(i, v.coeff(i));
  return out;
}

}  // namespace atss
