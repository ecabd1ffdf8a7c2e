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

#ifndef ATSS_RNG_HPP_
#define ATSS_RNG_HPP_

#include <cstdint>
#include <initializer_list>

#include "atss/bigint.hpp"

namespace atss {

// Seedable, splittable deterministic generator (xoshiro256** core, splitmix64
// seeding). Every protocol run takes an explicit seed; forked children are
// derived from the parent's base seed and caller-chosen tags, so the stream a
// component sees does not depend on how sibling components interleave draws.
//
// Not cryptographic. The artifact trades CSPRNG strength for reproducible
// transcripts across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Child generator identified by (base seed, tags). Same tags, same child.
  Rng fork(std::initializer_list<uint64_t> tags) const;
  Rng fork(uint64_t a) const { return fork({a}); }
  Rng fork(uint64_t a, uint64_t b) const { return fork({a, b}); }
  Rng fork(uint64_t a, uint64_t b, uint64_t c) const { return fork({a, b, c}); }

  uint64_t next();

  // Unbiased uniform draw in [0, bound); bound > 0.
  uint64_t below_u64(uint64_t bound);
  BigInt below(const BigInt& bound);

  // Uniform in [-bound, bound] as a signed value.
  int64_t signed_in(uint64_t bound);
  BigInt signed_in_big(const BigInt& bound);

  uint64_t base_seed() const { return base_seed_; }

 private:
  uint64_t base_seed_;
  uint64_t s_[4];
};

}  // namespace atss

#endif  // ATSS_RNG_HPP_
