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

#include <vector>

#include "atss/errors.hpp"
#include "atss/rlwe.hpp"
#include "atss/shamir.hpp"

using namespace atss;
using rlwe::CipherParams;
using rlwe::RlweCiphertext;
using rlwe::SecretKey;

namespace {

RingPoly zeros(const Modulus& q, size_t n) { return RingPoly(q, n); }

CipherParams toy_params(uint64_t p_val, const BigInt& noise_bound,
                        uint32_t n_parties, size_t degree = 4) {
  const Modulus p{p_val};
  const BigInt q = rlwe::find_cipher_modulus(p, noise_bound, n_parties, degree);
  return CipherParams::validated(degree, Modulus(q), p, noise_bound, n_parties);
}

}  // namespace

TEST_CASE("parameter validation pins the modulus inequality") {
  const Modulus p{uint64_t{17}};
  // bound for N=2, B'=1: 2*17^2*1*2 + 2*17 = 1190
  CHECK_THROWS_AS(
      CipherParams::validated(4, Modulus(uint64_t{1190}), p, BigInt(1), 2),
      ParamError);
  CHECK_NOTHROW(
      CipherParams::validated(4, Modulus(uint64_t{1193}), p, BigInt(1), 2));
  // composite plaintext modulus rejected by validation
  CHECK_THROWS_AS(CipherParams::validated(4, Modulus(uint64_t{4099}),
                                          Modulus(uint64_t{15}), BigInt(0), 1),
                  ParamError);
  CHECK_NOTHROW(CipherParams::unchecked(1, Modulus(uint64_t{64}),
                                        Modulus(uint64_t{4}), BigInt(1), 1));
}

TEST_CASE("modulus search returns an ntt-friendly prime above the bound") {
  const Modulus p{uint64_t{65537}};
  for (uint32_t n : {10u, 100u, 1000u}) {
    const BigInt q = rlwe::find_cipher_modulus(p, BigInt(16), n, 4096);
    CHECK(is_probable_prime(q));
    CHECK(q > 2 * p.value() * p.value() * 16 * n + 2 * p.value());
    CHECK(mod_reduce(q, BigInt(2 * 4096)) == 1);
    CHECK(mod_reduce(q, p.value()) == 1);
  }
}

TEST_CASE("keygen emits ternary keys deterministically") {
  const CipherParams params = toy_params(17, BigInt(1), 3, 8);
  Rng r1(5), r2(5);
  const SecretKey k1 = rlwe::keygen(r1, params);
  const SecretKey k2 = rlwe::keygen(r2, params);
  CHECK(k1.key == k2.key);
  for (int rep = 0; rep < 200; ++rep) {
    CHECK(inf_norm(rlwe::keygen(r1, params).key) <= 1);
  }
}

TEST_CASE("sk_encrypt degenerate and worked examples") {
  SUBCASE("all-zero inputs give the zero ciphertext") {
    const CipherParams params =
        CipherParams::unchecked(1, Modulus(uint64_t{64}), Modulus(uint64_t{4}),
                                BigInt(0), 1);
    const SecretKey sk{zeros(params.q, 1)};
    const auto ct = rlwe::sk_encrypt_with_error(
        sk, zeros(params.p, 1), zeros(params.q, 1), zeros(params.q, 1), params);
    CHECK(ct.c0.is_zero());
    CHECK(ct.c1.is_zero());
  }
  SUBCASE("P'=4, Q'=64: c0 = 17 decrypts to 1") {
    const CipherParams params =
        CipherParams::unchecked(1, Modulus(uint64_t{64}), Modulus(uint64_t{4}),
                                BigInt(1), 1);
    CHECK(params.delta == 16);
    SecretKey sk{zeros(params.q, 1)};
    sk.key.set_coeff_u64(0, 1);
    RingPoly m(params.p, 1);
    m.set_coeff_u64(0, 1);
    RingPoly e(params.q, 1);
    e.set_coeff_u64(0, 1);
    const auto ct = rlwe::sk_encrypt_with_error(sk, m, zeros(params.q, 1), e,
                                                params);
    CHECK(ct.c0.coeff(0) == 17);  // a*sk + e + delta*m = 0 + 1 + 16
    CHECK(ct.c1.is_zero());
    CHECK(rlwe::decrypt(sk, ct, params) == m);
  }
}

TEST_CASE("round-trip under the validated error budget") {
  SUBCASE("toy scale") {
    Rng rng(7);
    for (size_t degree : {4u, 8u}) {
      const CipherParams params = toy_params(17, BigInt(1), 3, degree);
      for (int rep = 0; rep < 500; ++rep) {
        const SecretKey sk = rlwe::keygen(rng, params);
        const RingPoly m = sample_uniform(rng, degree, params.p);
        const RingPoly a = sample_uniform(rng, degree, params.q);
        CHECK(rlwe::decrypt(sk, rlwe::sk_encrypt(sk, m, a, params, rng),
                            params) == m);
      }
    }
  }
  SUBCASE("production scale") {
    Rng rng(9);
    const CipherParams params = toy_params(65537, BigInt(16), 10, 4096);
    const SecretKey sk = rlwe::keygen(rng, params);
    for (int rep = 0; rep < 1000; ++rep) {
      const RingPoly m = sample_uniform(rng, 4096, params.p);
      const RingPoly a = sample_uniform(rng, 4096, params.q);
      const auto ct = rlwe::sk_encrypt(sk, m, a, params, rng);
      if (rlwe::decrypt(sk, ct, params) != m) {
        REQUIRE(false);  // avoid 4096-coefficient diff spam
      }
    }
  }
}

TEST_CASE("decode boundary probes around half delta") {
  const CipherParams params = CipherParams::unchecked(
      1, Modulus(uint64_t{1024}), Modulus(uint64_t{4}), BigInt(0), 1);
  const BigInt delta = params.delta;  // 256
  RingPoly m(params.p, 1);
  m.set_coeff_u64(0, 2);
  const SecretKey sk{zeros(params.q, 1)};

  RingPoly c0 = lift_scale(m, delta, params.q);
  RlweCiphertext ct{c0, zeros(params.q, 1)};

  SUBCASE("noiseless") { CHECK(rlwe::decrypt(sk, ct, params) == m); }
  SUBCASE("error floor(delta/2) - 1 still decodes") {
    ct.c0.set_coeff(0, ct.c0.coeff(0) + (delta / 2 - 1));
    CHECK(rlwe::decrypt(sk, ct, params) == m);
    ct.c0 = poly_sub(c0, RingPoly(params.q, 1));
    ct.c0.set_coeff(0, ct.c0.coeff(0) - (delta / 2 - 1));
    CHECK(rlwe::decrypt(sk, ct, params) == m);
  }
  SUBCASE("error ceil(delta/2) + 1 flips the coefficient") {
    ct.c0.set_coeff(0, ct.c0.coeff(0) + (delta / 2 + 1));
    RingPoly flipped(params.p, 1);
    flipped.set_coeff_u64(0, 3);
    CHECK(rlwe::decrypt(sk, ct, params) == flipped);
  }
}

TEST_CASE("combine_weighted identities and the key-homomorphic law") {
  Rng rng(21);
  const CipherParams params = toy_params(17, BigInt(1), 4, 8);
  const RingPoly a = sample_uniform(rng, 8, params.q);

  SUBCASE("single ciphertext with unit weight is unchanged") {
    const SecretKey sk = rlwe::keygen(rng, params);
    const RingPoly m = sample_uniform(rng, 8, params.p);
    const auto ct = rlwe::sk_encrypt(sk, m, a, params, rng);
    const auto combined = rlwe::combine_weighted({ct}, {BigInt(1)});
    CHECK(combined.c0 == ct.c0);
    CHECK(combined.c1 == ct.c1);
  }

  SUBCASE("sum of two ciphertexts decrypts under the key sum") {
    const SecretKey sk1 = rlwe::keygen(rng, params);
    const SecretKey sk2 = rlwe::keygen(rng, params);
    const RingPoly m1 = sample_uniform(rng, 8, params.p);
    const RingPoly m2 = sample_uniform(rng, 8, params.p);
    const auto ct1 = rlwe::sk_encrypt(sk1, m1, a, params, rng);
    const auto ct2 = rlwe::sk_encrypt(sk2, m2, a, params, rng);
    const auto sum = rlwe::combine_weighted({ct1, ct2}, {BigInt(1), BigInt(1)});
    const SecretKey sum_key{poly_add(sk1.key, sk2.key)};
    CHECK(rlwe::decrypt(sum_key, sum, params) == poly_add(m1, m2));
  }

  SUBCASE("mismatched common polynomial is rejected") {
    const SecretKey sk = rlwe::keygen(rng, params);
    const RingPoly m = sample_uniform(rng, 8, params.p);
    const RingPoly a2 = sample_uniform(rng, 8, params.q);
    const auto ct1 = rlwe::sk_encrypt(sk, m, a, params, rng);
    const auto ct2 = rlwe::sk_encrypt(sk, m, a2, params, rng);
    CHECK_THROWS_AS(rlwe::combine_weighted({ct1, ct2}, {BigInt(1), BigInt(1)}),
                    ParamError);
  }
}

TEST_CASE("weighted share and unit noise ciphertexts decrypt under the "
          "combined key with errors inside the budget") {
  Rng rng(33);
  const uint32_t n = 3;
  const CipherParams params = toy_params(17, BigInt(1), n, 8);
  const BigInt rho = mod_reduce(params.q.value(), params.p.value());
  REQUIRE(rho == 1);  // the searched modulus keeps the scaling defect at 1

  for (int rep = 0; rep < 200; ++rep) {
    const RingPoly a = sample_uniform(rng, 8, params.q);
    const auto weights = shamir::lagrange_coeffs({1, 3}, params.p);

    std::vector<RlweCiphertext> cts;
    std::vector<BigInt> w;
    std::vector<RingPoly> errors;
    RingPoly dk_poly(params.q, 8);
    std::vector<BigInt> plain_int(8, BigInt(0));  // integer plaintext ledger

    for (size_t i = 0; i < weights.points.size(); ++i) {
      const SecretKey ek1 = rlwe::keygen(rng, params);
      const SecretKey ek2 = rlwe::keygen(rng, params);
      const RingPoly s = sample_uniform(rng, 8, params.p);
      const RingPoly noise = sample_bounded(rng, 8, params.p, BigInt(2));
      const RingPoly e1 =
          sample_bounded(rng, 8, params.q, params.noise_bound);
      const RingPoly e2 =
          sample_bounded(rng, 8, params.q, params.noise_bound);
      cts.push_back(rlwe::sk_encrypt_with_error(ek1, s, a, e1, params));
      w.push_back(weights.coeffs[i]);
      cts.push_back(rlwe::sk_encrypt_with_error(ek2, noise, a, e2, params));
      w.push_back(BigInt(1));
      errors.push_back(poly_add(poly_scalar_mul(weights.coeffs[i], e1), e2));
      add_scaled(dk_poly, weights.coeffs[i], ek1.key);
      dk_poly = poly_add(dk_poly, ek2.key);
      for (size_t c = 0; c < 8; ++c) {
        plain_int[c] += weights.coeffs[i] * s.coeff(c) + noise.coeff(c);
      }
    }
    const auto all = rlwe::combine_weighted(cts, w);
    const SecretKey dk{dk_poly};

    // expected plaintext: the weighted sum reduced mod P'
    RingPoly expect(params.p, 8);
    for (size_t c = 0; c < 8; ++c) expect.set_coeff(c, plain_int[c]);
    CHECK(rlwe::decrypt(dk, all, params) == expect);

    // analytic budget N P' B' and the measured error against the ledger
    BigInt logged = 0;
    for (const auto& e : errors) logged = std::max(logged, inf_norm(e));
    const BigInt budget = BigInt(n) * params.p.value() * params.noise_bound;
    CHECK(logged <= budget);
    CHECK(2 * budget < params.delta);

    const RingPoly v = poly_add(all.c0, poly_mul(all.c1, dk.key));
    const RingPoly scaled = lift_scale(expect, params.delta, params.q);
    for (size_t c = 0; c < 8; ++c) {
      // exact ledger: v - delta*lift = sum(w e1 + e2) - kappa with
      // kappa = floor(S/P') and Q' = delta P' + 1
      BigInt ledger = 0;
      for (size_t i = 0; i < errors.size(); ++i) {
        ledger += params.q.center(errors[i].coeff(c));
      }
      ledger -= plain_int[c] / params.p.value();
      const BigInt measured = params.q.center(
          mod_reduce(v.coeff(c) - scaled.coeff(c), params.q.value()));
      CHECK(measured == ledger);
      CHECK(abs(measured) < params.delta / 2);
    }
  }
}
