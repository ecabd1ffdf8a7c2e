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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "atss/errors.hpp"
#include "atss/shamir.hpp"

using namespace atss;

namespace {

const Modulus kQ17{uint64_t{17}};
const Modulus kQ5{uint64_t{5}};

RingPoly scalar(const Modulus& q, uint64_t v) {
  RingPoly out(q, 1);
  out.set_coeff_u64(0, v);
  return out;
}

// Seed whose first uniform draw below `q` equals `want`; realizes "fix the
// rng so the random coefficient is c" and full randomness enumeration.
uint64_t seed_with_first_draw(uint64_t q, uint64_t want) {
  for (uint64_t seed = 0; seed < 100000; ++seed) {
    Rng rng(seed);
    if (rng.below_u64(q) == want) return seed;
  }
  FAIL("no seed found");
  return 0;
}

// Interpolation-at-zero oracle over the prime field, independent of the
// library's Lagrange code path.
BigInt interpolate_at_zero(const std::vector<std::pair<uint32_t, BigInt>>& pts,
                           const Modulus& q) {
  BigInt acc = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    BigInt num = 1, den = 1;
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      num = mod_reduce(num * pts[j].first, q.value());
      den = mod_reduce(den * (BigInt(pts[j].first) - BigInt(pts[i].first)),
                       q.value());
    }
    acc += num * mod_inverse(den, q.value()) % q.value() * pts[i].second;
  }
  return mod_reduce(acc, q.value());
}

std::vector<std::vector<uint32_t>> subsets_of_size(uint32_t n, uint32_t k) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur;
  const std::function<void(uint32_t)> go = [&](uint32_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (uint32_t v = from; v <= n; ++v) {
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(1);
  return out;
}

}  // namespace

TEST_CASE("worked line f(x) = 5 + 3x gives shares 8, 11, 14") {
  Rng rng(seed_with_first_draw(17, 3));  // the sampled coefficient is 3
  const auto shares = shamir::share(scalar(kQ17, 5), 3, 2, rng);
  REQUIRE(shares.size() == 3);
  CHECK(shares[0].point == 1);
  CHECK(shares[0].payload.coeff(0) == 8);
  CHECK(shares[1].payload.coeff(0) == 11);
  CHECK(shares[2].payload.coeff(0) == 14);
  // direct-evaluation oracle at each point
  for (const auto& s : shares) {
    CHECK(s.payload.coeff(0) == (5 + 3 * s.point) % 17);
  }
}

TEST_CASE("threshold one duplicates the secret") {
  Rng rng(4);
  const auto shares = shamir::share(scalar(kQ17, 9), 4, 1, rng);
  for (const auto& s : shares) CHECK(s.payload.coeff(0) == 9);
}

TEST_CASE("single-share distribution is secret-independent under full "
          "randomness enumeration") {
  // Z_5, M = 1, N = 3, T = 2: the whole randomness is one uniform
  // coefficient. Enumerate it by pinning the generator to each value.
  std::map<uint64_t, std::vector<uint64_t>> dist_by_secret;
  for (uint64_t secret : {0ull, 1ull}) {
    for (uint64_t r = 0; r < 5; ++r) {
      Rng rng(seed_with_first_draw(5, r));
      const auto shares = shamir::share(scalar(kQ5, secret), 3, 2, rng);
      for (const auto& s : shares) {
        dist_by_secret[secret * 10 + s.point].push_back(
            to_u64(s.payload.coeff(0)));
      }
    }
  }
  for (uint32_t point = 1; point <= 3; ++point) {
    auto d0 = dist_by_secret[point];       // secret 0
    auto d1 = dist_by_secret[10 + point];  // secret 1
    std::sort(d0.begin(), d0.end());
    std::sort(d1.begin(), d1.end());
    CHECK(d0 == d1);  // identical multisets: every value exactly once
    CHECK(d0 == std::vector<uint64_t>{0, 1, 2, 3, 4});
  }
}

TEST_CASE("lagrange coefficients match the hand formula") {
  const auto set = shamir::lagrange_coeffs({1, 2}, kQ17);
  CHECK(set.at(1) == 2);   // 2/(2-1)
  CHECK(set.at(2) == 16);  // 1/(1-2) = -1
  CHECK_THROWS_AS(set.at(9), ParamError);

  const auto singleton = shamir::lagrange_coeffs({7}, kQ17);
  CHECK(singleton.at(7) == 1);
}

TEST_CASE("lagrange coefficients interpolate every line through zero") {
  const auto set = shamir::lagrange_coeffs({1, 2, 3}, kQ17);
  for (uint64_t c = 0; c < 17; ++c) {
    for (uint64_t d = 0; d < 17; ++d) {
      BigInt acc = 0;
      for (size_t i = 0; i < set.points.size(); ++i) {
        acc += set.coeffs[i] * ((c + d * set.points[i]) % 17);
      }
      CHECK(mod_reduce(acc, BigInt(17)) == c);
    }
  }
}

TEST_CASE("lagrange rejects duplicates and non-invertible differences") {
  CHECK_THROWS_AS(shamir::lagrange_coeffs({1, 1}, kQ17), ParamError);
  CHECK_THROWS_AS(shamir::lagrange_coeffs({}, kQ17), ParamError);
  // composite modulus: 4 - 1 = 3 shares a factor with 15
  const Modulus q15{uint64_t{15}};
  CHECK_THROWS_AS(shamir::lagrange_coeffs({1, 4}, q15), ParamError);
}

TEST_CASE("rec recovers the worked example and rejects short inputs") {
  std::vector<shamir::Share> shares{{1, scalar(kQ17, 8)},
                                    {2, scalar(kQ17, 11)}};
  CHECK(shamir::rec(shares, 2).coeff(0) == 5);  // 2*8 + 16*11 mod 17
  CHECK_THROWS_AS(shamir::rec(shares, 3), ProtocolError);
}

TEST_CASE("round-trip and subset-independence over vectors") {
  Rng rng(11);
  const Modulus q{uint64_t{65537}};
  const uint32_t n = 5, t = 3;
  for (int rep = 0; rep < 100; ++rep) {
    const RingPoly m = sample_uniform(rng, 16, q);
    const auto shares = shamir::share(m, n, t, rng);
    // every T-subset and larger reconstructs the same secret
    for (uint32_t size = t; size <= n; ++size) {
      for (const auto& subset : subsets_of_size(n, size)) {
        std::vector<shamir::Share> chosen;
        for (uint32_t pid : subset) chosen.push_back(shares[pid - 1]);
        CHECK(shamir::rec(chosen, t) == m);
      }
    }
  }
}

TEST_CASE("round-trip at production scale") {
  Rng rng(13);
  const Modulus q{uint64_t{65537}};
  for (int rep = 0; rep < 20; ++rep) {
    const RingPoly m = sample_uniform(rng, 4096, q);
    const auto shares = shamir::share(m, 5, 3, rng);
    std::vector<shamir::Share> first(shares.begin(), shares.begin() + 3);
    CHECK(shamir::rec(first, 3) == m);
  }
}

TEST_CASE("rec equals the interpolation oracle on scalar shares") {
  Rng rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    const RingPoly m = sample_uniform(rng, 1, kQ17);
    const auto shares = shamir::share(m, 4, 2, rng);
    std::vector<std::pair<uint32_t, BigInt>> pts{
        {shares[1].point, shares[1].payload.coeff(0)},
        {shares[3].point, shares[3].payload.coeff(0)}};
    CHECK(interpolate_at_zero(pts, kQ17) == m.coeff(0));
  }
}

TEST_CASE("linear_combine carries weighted secrets through recovery") {
  Rng rng(19);
  const Modulus q = kQ17;
  const uint32_t n = 4, t = 3;

  SUBCASE("unit weights add secrets") {
    const RingPoly m1 = sample_uniform(rng, 8, q);
    const RingPoly m2 = sample_uniform(rng, 8, q);
    const auto s1 = shamir::share(m1, n, t, rng);
    const auto s2 = shamir::share(m2, n, t, rng);
    std::vector<shamir::Share> combined;
    for (uint32_t i = 0; i < n; ++i) {
      combined.push_back(
          shamir::linear_combine({s1[i], s2[i]}, {BigInt(1), BigInt(1)}));
    }
    CHECK(shamir::rec(combined, t) == poly_add(m1, m2));
  }

  SUBCASE("zero weight removes a secret") {
    const RingPoly m1 = sample_uniform(rng, 8, q);
    const RingPoly m2 = sample_uniform(rng, 8, q);
    const auto s1 = shamir::share(m1, n, t, rng);
    const auto s2 = shamir::share(m2, n, t, rng);
    std::vector<shamir::Share> combined;
    for (uint32_t i = 0; i < n; ++i) {
      combined.push_back(
          shamir::linear_combine({s1[i], s2[i]}, {BigInt(1), BigInt(0)}));
    }
    CHECK(shamir::rec(combined, t) == m1);
  }

  SUBCASE("random weights against the direct-recompute oracle") {
    for (int rep = 0; rep < 1000; ++rep) {
      const RingPoly m1 = sample_uniform(rng, 2, q);
      const RingPoly m2 = sample_uniform(rng, 2, q);
      const RingPoly m3 = sample_uniform(rng, 2, q);
      const BigInt w1 = rng.below(q.value());
      const BigInt w2 = rng.below(q.value());
      const BigInt w3 = rng.below(q.value());
      const auto s1 = shamir::share(m1, n, t, rng);
      const auto s2 = shamir::share(m2, n, t, rng);
      const auto s3 = shamir::share(m3, n, t, rng);
      std::vector<shamir::Share> combined;
      for (uint32_t i = 0; i < n; ++i) {
        combined.push_back(
            shamir::linear_combine({s1[i], s2[i], s3[i]}, {w1, w2, w3}));
      }
      RingPoly want = poly_scalar_mul(w1, m1);
      add_scaled(want, w2, m2);
      add_scaled(want, w3, m3);
      CHECK(shamir::rec(combined, t) == want);
    }
  }

  SUBCASE("mismatched points are rejected") {
    const auto s1 = shamir::share(scalar(q, 3), n, t, rng);
    CHECK_THROWS_AS(
        shamir::linear_combine({s1[0], s1[1]}, {BigInt(1), BigInt(1)}),
        ParamError);
  }
}

TEST_CASE("lagrange identity: coefficients of any set sum to one") {
  for (uint32_t size = 1; size <= 5; ++size) {
    for (const auto& subset : subsets_of_size(5, size)) {
      const auto set = shamir::lagrange_coeffs(subset, kQ17);
      BigInt sum = 0;
      for (const auto& c : set.coeffs) sum += c;
      CHECK(mod_reduce(sum, BigInt(17)) == 1);
    }
  }
}

TEST_CASE("share parameter validation") {
  Rng rng(23);
  const RingPoly m = scalar(kQ17, 4);
  CHECK_THROWS_AS(shamir::share(m, 3, 4, rng), ParamError);  // T > N
  CHECK_THROWS_AS(shamir::share(m, 3, 0, rng), ParamError);
  CHECK_THROWS_AS(shamir::share(m, 3, 2, {0, 1, 2}, rng), ParamError);
  CHECK_THROWS_AS(shamir::share(m, 3, 2, {1, 1, 2}, rng), ParamError);
  CHECK_THROWS_AS(shamir::share(m, 18, 2, rng), ParamError);  // point = q
}
