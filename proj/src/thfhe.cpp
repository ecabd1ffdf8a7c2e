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

#include "atss/thfhe.hpp"

#include "atss/atasses.hpp"
#include "atss/baselines.hpp"
#include "atss/errors.hpp"

namespace atss {
namespace thfhe {
namespace {

constexpr uint64_t kKeyDomain = 0x5448465f6b657973ULL;
constexpr uint64_t kShareDomain = 0x5448465f73686172ULL;
constexpr uint64_t kPkDomain = 0x5448465f706b6579ULL;

PartyShare add_party_shares(const PartyShare& a, const PartyShare& b) {
  if (a.party != b.party || a.labels != b.labels) {
    throw ParamError("share structure mismatch");
  }
  PartyShare out;
  out.party = a.party;
  out.labels = a.labels;
  out.pieces.reserve(a.pieces.size());
  for (size_t i = 0; i < a.pieces.size(); ++i) {
    out.pieces.push_back(poly_add(a.pieces[i], b.pieces[i]));
  }
  return out;
}

}  // namespace

OuterParams OuterParams::derive(size_t degree, Modulus q, Modulus p,
                                BigInt noise_bound, BigInt smudge_bound,
                                uint32_t n, uint32_t t, uint32_t additions) {
  OuterParams out;
  out.degree = degree;
  out.q = std::move(q);
  out.p = std::move(p);
  out.delta = out.q.value() / out.p.value();
  out.noise_bound = std::move(noise_bound);
  out.smudge_bound = std::move(smudge_bound);
  out.n = n;
  out.t = t;
  out.additions = additions;
  // fresh error u*e_pk + e0 + e1*sk with ternary u, sk: the degree-M ring
  // products expand norms by up to M
  out.fresh_bound =
      BigInt(degree) * (BigInt(n) + 1) * out.noise_bound + out.noise_bound;
  // summing `additions` plaintexts wraps the integer sum mod p up to
  // additions-1 times; each wrap costs rho = q mod p in the scaled domain
  const BigInt rho = mod_reduce(out.q.value(), out.p.value());
  out.eval_bound = BigInt(additions) * out.fresh_bound +
                   rho * (BigInt(additions) - 1);
  out.validate();
  return out;
}

void OuterParams::validate() const {
  validate(BigInt(t) * smudge_bound);
}

void OuterParams::validate(const BigInt& approx_bound) const {
  if (degree == 0 || (degree & (degree - 1)) != 0) {
    throw ParamError("ring degree must be a power of two");
  }
  if (n < 1 || t < 1 || t > n) throw ParamError("need 1 <= T <= N");
  if (additions < 1) throw ParamError("additive width must be positive");
  if (delta < 2) throw ParamError("delta too small");
  if (!q.is_prime()) {
    throw ParamError("ciphertext modulus must be prime (shares live mod Q)");
  }
  if (from_u64(n) >= q.value()) throw ParamError("party count exceeds modulus");
  if (noise_bound < 0 || smudge_bound < 0) throw ParamError("negative bound");
  // decryption budget: the approximate-recovery bound stays below delta/2 - B_CT
  if (2 * (approx_bound + eval_bound) >= q.value() / p.value()) {
    throw ParamError("decryption budget violated: need B + B_CT < delta/2");
  }
}

BigInt find_outer_modulus(size_t degree, const Modulus& p,
                          const BigInt& noise_bound, const BigInt& smudge_bound,
                          uint32_t n, uint32_t t, uint32_t additions) {
  const BigInt fresh = BigInt(degree) * (BigInt(n) + 1) * noise_bound +
                       noise_bound;
  const BigInt budget = BigInt(additions) * (fresh + 1) +
                        BigInt(t) * smudge_bound;
  const BigInt need = 2 * p.value() * (2 * budget + 1);  // slack factor 2
  // q ≡ 1 mod 2*degree enables the NTT; q ≡ 1 mod p keeps the scaled-domain
  // wrap cost of homomorphic additions at one per wrap
  if (p.value() % 2 != 1 || !p.is_prime()) {
    throw ParamError("plaintext modulus must be an odd prime");
  }
  const BigInt step = 2 * BigInt(degree) * p.value();
  BigInt k = need / step + 1;
  while (true) {
    BigInt candidate = k * step + 1;
    if (is_probable_prime(candidate)) return candidate;
    k += 1;
  }
}

BackendFactory atasses_backend(const OuterParams& params, size_t inner_degree,
                               BigInt inner_noise_bound, uint64_t crs_seed) {
  const Modulus msg_mod = params.q;
  const uint32_t n = params.n;
  const uint32_t t = params.t;
  const BigInt b_sm = params.smudge_bound;
  return [=](size_t msg_len) {
    return atasses::make_scheme(atasses::make_config(
        n, t, msg_mod, msg_len, inner_degree, inner_noise_bound, b_sm,
        crs_seed));
  };
}

BackendFactory replicated_backend(const OuterParams& params) {
  const Modulus msg_mod = params.q;
  const uint32_t n = params.n;
  const uint32_t t = params.t;
  const BigInt b_sm = params.smudge_bound;
  return [=](size_t msg_len) {
    baselines::ReplicatedConfig cfg;
    cfg.n = n;
    cfg.t = t;
    cfg.msg_mod = msg_mod;
    cfg.msg_len = msg_len;
    cfg.smudge_bound = b_sm;
    return baselines::make_replicated(std::move(cfg));
  };
}

BackendFactory type2_backend(const OuterParams& params) {
  const Modulus msg_mod = params.q;
  const uint32_t n = params.n;
  const uint32_t t = params.t;
  const BigInt b_sm = params.smudge_bound;
  return [=](size_t msg_len) {
    baselines::Type2Config cfg;
    cfg.n = n;
    cfg.t = t;
    cfg.msg_mod = msg_mod;
    cfg.msg_len = msg_len;
    cfg.smudge_bound = b_sm;
    return baselines::make_type2(std::move(cfg));
  };
}

BackendFactory type1_backend(const OuterParams& params) {
  const Modulus msg_mod = params.q;
  const uint32_t n = params.n;
  const uint32_t t = params.t;
  const BigInt b_sm = params.smudge_bound;
  return [=](size_t msg_len) {
    baselines::Type1Config cfg;
    cfg.n = n;
    cfg.t = t;
    cfg.msg_mod = msg_mod;
    cfg.msg_len = msg_len;
    cfg.smudge_bound = b_sm;
    return baselines::make_type1(std::move(cfg));
  };
}

OuterParams derive_type1_outer(size_t degree, Modulus p, BigInt noise_bound,
                               BigInt smudge_bound, uint32_t n, uint32_t t,
                               uint32_t additions) {
  const BigInt f = factorial(n);
  const BigInt scheme_bound = BigInt(n) * f * f * f * smudge_bound;
  const BigInt fresh =
      BigInt(degree) * (BigInt(n) + 1) * noise_bound + noise_bound;
  const BigInt budget = BigInt(additions) * fresh + scheme_bound;
  BigInt need = 2 * p.value() * (2 * budget + 1);
  if (need < 2 * scheme_bound) need = 2 * scheme_bound;
  const BigInt q = next_prime_above(need);
  OuterParams out = OuterParams::derive(degree, Modulus(q), std::move(p),
                                        std::move(noise_bound),
                                        std::move(smudge_bound), n, t,
                                        additions);
  out.validate(scheme_bound);
  return out;
}

RingPoly keygen_local(Rng& rng, const OuterParams& params) {
  return sample_ternary(rng, params.degree, params.q);
}

std::vector<PartyShare> sk_share(const ApproxScheme& key_scheme,
                                 const std::vector<RingPoly>& local_keys,
                                 Rng& rng) {
  const uint32_t n = key_scheme.parties();
  if (local_keys.size() != n) {
    throw ParamError("setup requires every party's local key");
  }
  std::vector<PartyShare> acc;
  for (uint32_t j = 0; j < n; ++j) {
    Rng share_rng = rng.fork(kShareDomain, j + 1);
    std::vector<PartyShare> shares = key_scheme.share(local_keys[j], share_rng);
    if (acc.empty()) {
      acc = std::move(shares);
    } else {
      for (uint32_t i = 0; i < n; ++i) {
        acc[i] = add_party_shares(acc[i], shares[i]);
      }
    }
  }
  return acc;
}

PkGenResult collective_pkgen(const std::vector<RingPoly>& local_keys,
                             const RingPoly& crs_a, const OuterParams& params,
                             Rng& rng) {
  if (local_keys.empty()) throw ParamError("no parties");
  PkGenResult out;
  out.pk.p1 = crs_a;
  out.pk.p0 = RingPoly(params.q, params.degree);
  Rng pk_rng = rng.fork(kPkDomain);
  for (size_t i = 0; i < local_keys.size(); ++i) {
    RingPoly e =
        sample_bounded(pk_rng, params.degree, params.q, params.noise_bound);
    RingPoly p0i = poly_add(poly_neg(poly_mul(crs_a, local_keys[i])), e);
    out.pk.p0 = poly_add(out.pk.p0, p0i);
    out.noises.push_back(std::move(e));
  }
  return out;
}

KeyMaterial setup(const ApproxScheme& key_scheme, const OuterParams& params,
                  Rng& rng) {
  KeyMaterial out;
  Rng key_rng = rng.fork(kKeyDomain);
  for (uint32_t i = 0; i < params.n; ++i) {
    out.local_keys.push_back(keygen_local(key_rng, params));
  }
  out.global_shares = sk_share(key_scheme, out.local_keys, rng);
  const RingPoly a = sample_uniform(key_rng, params.degree, params.q);
  PkGenResult pk = collective_pkgen(out.local_keys, a, params, rng);
  out.pk = std::move(pk.pk);
  out.pk_noises = std::move(pk.noises);
  return out;
}

Ciphertext pk_encrypt_with(const PublicKey& pk, const RingPoly& m,
                           const RingPoly& u, const RingPoly& e0,
                           const RingPoly& e1, const OuterParams& params) {
  if (m.modulus() != params.p || m.size() != params.degree) {
    throw ParamError("plaintext not in the message ring");
  }
  Ciphertext ct;
  ct.c0 = poly_add(poly_add(poly_mul(u, pk.p0), e0),
                   lift_scale(m, params.delta, params.q));
  ct.c1 = poly_add(poly_mul(u, pk.p1), e1);
  return ct;
}

Ciphertext pk_encrypt(const PublicKey& pk, const RingPoly& m,
                      const OuterParams& params, Rng& rng) {
  RingPoly u = sample_ternary(rng, params.degree, params.q);
  RingPoly e0 =
      sample_bounded(rng, params.degree, params.q, params.noise_bound);
  RingPoly e1 =
      sample_bounded(rng, params.degree, params.q, params.noise_bound);
  return pk_encrypt_with(pk, m, u, e0, e1, params);
}

Ciphertext eval_add(const std::vector<Ciphertext>& cts) {
  if (cts.empty()) throw ParamError("empty evaluation");
  Ciphertext out = cts[0];
  for (size_t i = 1; i < cts.size(); ++i) {
    out.c0 = poly_add(out.c0, cts[i].c0);
    out.c1 = poly_add(out.c1, cts[i].c1);
  }
  return out;
}

PartyShare dec_phase1(const ApproxScheme& rec_scheme, const OuterParams& params,
                      const std::vector<Ciphertext>& cts,
                      const PartyShare& key_share) {
  if (cts.empty()) throw ParamError("nothing to decrypt");
  const bool const_everywhere = rec_scheme.constant_on_every_piece();
  const uint32_t const_label = rec_scheme.designated_constant_label();
  PartyShare out;
  out.party = key_share.party;
  out.labels = key_share.labels;
  for (size_t piece = 0; piece < key_share.pieces.size(); ++piece) {
    const bool carries_const =
        const_everywhere || key_share.labels[piece] == const_label;
    std::vector<RingPoly> blocks;
    blocks.reserve(cts.size());
    for (const auto& ct : cts) {
      RingPoly b = poly_mul(ct.c1, key_share.pieces[piece]);
      if (carries_const) b = poly_add(b, ct.c0);
      blocks.push_back(std::move(b));
    }
    out.pieces.push_back(concat(blocks, cts.size() * params.degree));
  }
  return out;
}

sim::RunResult dec_phase2(const ApproxScheme& rec_scheme,
                          std::vector<PartyShare> shares,
                          const sim::DropoutSchedule& dropout, uint64_t seed) {
  return sim::run_session(rec_scheme, std::move(shares), dropout, seed);
}

std::vector<RingPoly> dec_phase3(const RingPoly& b_prime,
                                 const OuterParams& params) {
  if (b_prime.size() % params.degree != 0) {
    throw ParamError("recovered vector is not a whole number of ciphertexts");
  }
  const size_t count = b_prime.size() / params.degree;
  std::vector<RingPoly> out;
  out.reserve(count);
  for (size_t c = 0; c < count; ++c) {
    RingPoly block = chunk_of(b_prime, c * params.degree, params.degree);
    out.push_back(decode_round(block, params.delta, params.p));
  }
  return out;
}

Rational smudging_tv_distance(const BigInt& b1, const BigInt& b2) {
  if (b1 < 0 || b2 < 0) throw ParamError("negative bound");
  if (b1 > b2) throw ParamError("need B1 <= B2");
  Rational out;
  out.num = b1;
  out.den = 2 * b2 + 1;
  return out;
}

Pipeline::Pipeline(OuterParams params, BackendFactory factory)
    : params_(std::move(params)), factory_(std::move(factory)) {
  key_scheme_ = factory_(params_.degree);
  if (key_scheme_->parties() != params_.n ||
      key_scheme_->threshold() != params_.t) {
    throw ParamError("backend sized for different N or T");
  }
  if (key_scheme_->message_space().mod != params_.q) {
    throw ParamError("backend message space must be the ciphertext space");
  }
  params_.validate(key_scheme_->recovery_bound());
}

KeyMaterial Pipeline::run_setup(Rng& rng) const {
  return setup(*key_scheme_, params_, rng);
}

DecryptOutcome Pipeline::decrypt(const KeyMaterial& keys,
                                 const std::vector<Ciphertext>& cts,
                                 const sim::DropoutSchedule& dropout,
                                 uint64_t seed) const {
  DecryptOutcome out;
  auto rec_scheme = factory_(cts.size() * params_.degree);
  std::vector<PartyShare> dec_shares;
  dec_shares.reserve(params_.n);
  for (uint32_t i = 0; i < params_.n; ++i) {
    dec_shares.push_back(
        dec_phase1(*rec_scheme, params_, cts, keys.global_shares[i]));
  }
  out.run = dec_phase2(*rec_scheme, std::move(dec_shares), dropout, seed);
  if (out.run.aborted) {
    out.aborted = true;
    out.abort_reason = out.run.abort_reason;
    return out;
  }
  out.plaintexts = dec_phase3(out.run.output, params_);
  return out;
}

}  // namespace thfhe
}  // namespace atss
