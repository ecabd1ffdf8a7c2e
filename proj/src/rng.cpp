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

#include "atss/rng.hpp"

#include <vector>

namespace atss {
namespace {

inline uint64_t splitmix64(uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(uint64_t seed) : base_seed_(seed) {
  uint64_t x = seed;
  for (auto& w : s_) w = splitmix64(x);
  // xoshiro must not start from the all-zero state
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

Rng Rng::fork(std::initializer_list<uint64_t> tags) const {
  uint64_t x = base_seed_ ^ 0xa5a5a5a5a5a5a5a5ULL;
  uint64_t acc = splitmix64(x);
  for (uint64_t t : tags) {
    x ^= t + 0x9e3779b97f4a7c15ULL + (acc << 6) + (acc >> 2);
    acc = splitmix64(x);
  }
  return Rng(acc);
}

uint64_t Rng::next() {
  const uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

uint64_t Rng::below_u64(uint64_t bound) {
  // rejection sampling over the largest multiple of bound
  const uint64_t limit = bound * (UINT64_MAX / bound);
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

BigInt Rng::below(const BigInt& bound) {
  if (fits_u64(bound)) return from_u64(below_u64(to_u64(bound)));
  const size_t bits = bit_length(bound);
  const size_t words = (bits + 63) / 64;
  std::vector<uint64_t> buf(words);
  BigInt v;
  while (true) {
    for (auto& w : buf) w = next();
    // mask the top word so the rejection rate stays below 1/2
    const size_t top_bits = bits - 64 * (words - 1);
    if (top_bits < 64) buf[0] &= (uint64_t{1} << top_bits) - 1;
    mpz_import(v.get_mpz_t(), words, 1, sizeof(uint64_t), 0, 0, buf.data());
    if (v < bound) return v;
  }
}

int64_t Rng::signed_in(uint64_t bound) {
  const uint64_t span = 2 * bound + 1;  // bound < 2^62 in all callers
  return static_cast<int64_t>(below_u64(span)) - static_cast<int64_t>(bound);
}

BigInt Rng::signed_in_big(const BigInt& bound) {
  BigInt span = 2 * bound + 1;
  return below(span) - bound;
}

}  // namespace atss
