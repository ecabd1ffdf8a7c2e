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

#include "atss/modulus.hpp"

#include "atss/errors.hpp"

namespace atss {

BigInt mod_inverse(const BigInt& v, const BigInt& q) {
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t()) == 0) {
    throw ParamError("value not invertible modulo " + to_string(q));
  }
  return out;
}

Modulus::Modulus(BigInt q) : q_(std::move(q)) {
  if (q_ < 2) throw ParamError("modulus must be at least 2");
  half_ = q_ / 2;
  bits_ = bit_length(q_);
  byte_width_ = (bit_length(q_ - 1) + 7) / 8;
  single_word_ = bits_ <= 62;
  if (single_word_) {
    q64_ = to_u64(q_);
    half64_ = q64_ / 2;
  }
  prime_ = is_probable_prime(q_);
}

namespace modops {

uint64_t pow(uint64_t base, uint64_t exp, uint64_t q) {
  uint64_t acc = 1 % q;
  uint64_t b = base % q;
  while (exp) {
    if (exp & 1) acc = mul(acc, b, q);
    b = mul(b, b, q);
    exp >>= 1;
  }
  return acc;
}

uint64_t inv(uint64_t a, uint64_t q) {
  // extended Euclid over signed 128-bit intermediates
  __int128 t = 0, new_t = 1;
  __int128 r = q, new_r = a % q;
  while (new_r != 0) {
    __int128 quot = r / new_r;
    __int128 tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw ParamError("value not invertible");
  if (t < 0) t += q;
  return static_cast<uint64_t>(t);
}

}  // namespace modops
}  // namespace atss
