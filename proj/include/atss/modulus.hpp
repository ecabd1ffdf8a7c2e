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

#ifndef ATSS_MODULUS_HPP_
#define ATSS_MODULUS_HPP_

#include <cstdint>

#include "atss/bigint.hpp"

namespace atss {

// Residue arithmetic modulus. Arbitrary precision is the semantic contract;
// moduli below 2^62 additionally carry a uint64_t mirror that selects the
// single-word kernel paths.
class Modulus {
 public:
  Modulus() = default;
  explicit Modulus(BigInt q);
  explicit Modulus(uint64_t q) : Modulus(from_u64(q)) {}

  const BigInt& value() const { return q_; }
  bool single_word() const { return single_word_; }
  uint64_t u64() const { return q64_; }  // valid iff single_word()
  bool is_prime() const { return prime_; }
  size_t bits() const { return bits_; }
  // Minimal serialized width of a reduced residue: ceil(bits(q-1)/8).
  size_t byte_width() const { return byte_width_; }
  const BigInt& half() const { return half_; }  // floor(q/2)

  // Centered lift: r if r <= q/2, else r - q.
  BigInt center(const BigInt& r) const { return r > half_ ? BigInt(r - q_) : r; }
  int64_t center_u64(uint64_t r) const {
    return r > half64_ ? static_cast<int64_t>(r) - static_cast<int64_t>(q64_)
                       : static_cast<int64_t>(r);
  }

  bool operator==(const Modulus& o) const { return q_ == o.q_; }
  bool operator!=(const Modulus& o) const { return q_ != o.q_; }

 private:
  BigInt q_ = 0;
  BigInt half_ = 0;
  uint64_t q64_ = 0;
  uint64_t half64_ = 0;
  size_t bits_ = 0;
  size_t byte_width_ = 0;
  bool single_word_ = false;
  bool prime_ = false;
};

// Single-word modular primitives, q < 2^62.
namespace modops {

inline uint64_t add(uint64_t a, uint64_t b, uint64_t q) {
  uint64_t s = a + b;
  return s >= q ? s - q : s;
}

inline uint64_t sub(uint64_t a, uint64_t b, uint64_t q) {
  return a >= b ? a - b : a + q - b;
}

inline uint64_t neg(uint64_t a, uint64_t q) { return a == 0 ? 0 : q - a; }

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

// Shoup precomputation for a fixed multiplicand: floor(b * 2^64 / q).
inline uint64_t shoup(uint64_t b, uint64_t q) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(b) << 64) / q);
}

// a * b mod q with precomputed bs = shoup(b, q); requires q < 2^63.
inline uint64_t mul_shoup(uint64_t a, uint64_t b, uint64_t bs, uint64_t q) {
  const uint64_t hi =
      static_cast<uint64_t>((static_cast<unsigned __int128>(a) * bs) >> 64);
  const uint64_t r = a * b - hi * q;
  return r >= q ? r - q : r;
}

uint64_t pow(uint64_t base, uint64_t exp, uint64_t q);
uint64_t inv(uint64_t a, uint64_t q);  // gcd(a, q) == 1 required

}  // namespace modops
}  // namespace atss

#endif  // ATSS_MODULUS_HPP_
