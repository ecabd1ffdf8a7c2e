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

#ifndef ATSS_BIGINT_HPP_
#define ATSS_BIGINT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace atss {

// Arbitrary-precision integer. GMP backs all multi-word residue arithmetic;
// single-word moduli take a uint64_t fast path in the ring kernels.
using BigInt = mpz_class;

inline size_t bit_length(const BigInt& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64 &&
         mpz_fits_ulong_p(v.get_mpz_t());
}

inline uint64_t to_u64(const BigInt& v) { return mpz_get_ui(v.get_mpz_t()); }

inline BigInt from_u64(uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

// Deterministic for our sizes: 40 Miller-Rabin rounds.
inline bool is_probable_prime(const BigInt& v) {
  return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

inline BigInt next_prime_above(const BigInt& v) {
  BigInt out;
  mpz_nextprime(out.get_mpz_t(), v.get_mpz_t());
  return out;
}

inline BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline BigInt mod_reduce(const BigInt& v, const BigInt& q) {
  BigInt out;
  mpz_mod(out.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());  // always in [0, q)
  return out;
}

// Modular inverse; the caller guarantees gcd(v, q) == 1.
BigInt mod_inverse(const BigInt& v, const BigInt& q);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace atss

#endif  // ATSS_BIGINT_HPP_
