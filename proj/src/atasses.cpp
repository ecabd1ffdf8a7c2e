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

#include "atss/atasses.hpp"

#include <algorithm>

#include "atss/errors.hpp"
#include "atss/serialize.hpp"

namespace atss {
namespace atasses {
namespace {

constexpr uint64_t kCrsDomain = 0x6352535f41544153ULL;  // rng domain separator
constexpr uint64_t kKeyDomain = 0x4b45595f41544153ULL;
constexpr uint64_t kNoiseDomain = 0x4e4f495f41544153ULL;
constexpr uint64_t kErrDomain = 0x4552525f41544153ULL;

}  // namespace

size_t Config::chunk_count() const {
  return (msg_len + cipher.degree - 1) / cipher.degree;
}

void Config::validate() const {
  if (n < 1 || t < 1 || t > n) throw ParamError("need 1 <= T <= N");
  if (msg_len == 0) throw ParamError("empty message space");
  if (msg_mod != cipher.p) {
    throw ParamError("message modulus must equal the cipher plaintext modulus");
  }
  if (!msg_mod.is_prime()) throw ParamError("message modulus must be prime");
  if (from_u64(n) >= msg_mod.value()) {
    throw ParamError("party count must stay below the message modulus");
  }
  if (!cipher.q.is_prime()) {
    throw ParamError("cipher modulus must be prime (keys are Shamir-shared)");
  }
  if (cipher.max_parties < n) throw ParamError("cipher sized for fewer parties");
  if (smudge_bound < 0) throw ParamError("negative smudging bound");
  cipher.validate();
}

Config make_config(uint32_t n, uint32_t t, const Modulus& msg_mod,
                   size_t msg_len, size_t cipher_degree,
                   const BigInt& cipher_noise_bound, const BigInt& smudge_bound,
                   uint64_t crs_seed) {
  Config c;
  c.n = n;
  c.t = t;
  c.msg_mod = msg_mod;
  c.msg_len = msg_len;
  c.smudge_bound = smudge_bound;
  c.crs_seed = crs_seed;
  const BigInt q = rlwe::find_cipher_modulus(msg_mod, cipher_noise_bound, n,
                                             cipher_degree);
  c.cipher = rlwe::CipherParams::validated(cipher_degree, Modulus(q), msg_mod,
                                           cipher_noise_bound, n);
  c.validate();
  return c;
}

RingPoly crs_polynomial(const Config& config, uint64_t session_id, size_t k) {
  Rng rng = Rng(config.crs_seed).fork(kCrsDomain, session_id, k);
  return sample_uniform(rng, config.cipher.degree, config.cipher.q);
}

Round1PartyMsg party_round1(const Config& config, uint32_t party,
                            const RingPoly& message_share, uint64_t session_id,
                            Rng& rng, PartyState& state) {
  if (message_share.modulus() != config.msg_mod ||
      message_share.size() != config.msg_len) {
    throw ParamError("message share not in the message space");
  }
  state.id = party;

  Rng key_rng = rng.fork(kKeyDomain, party);
  rlwe::SecretKey ek1 = rlwe::keygen(key_rng, config.cipher);
  rlwe::SecretKey ek2 = rlwe::keygen(key_rng, config.cipher);

  Round1PartyMsg msg;
  Rng share_rng = rng.fork(kKeyDomain ^ 1, party);
  msg.ek_shares1 = shamir::share(ek1.key, config.n, config.t, share_rng);
  msg.ek_shares2 = shamir::share(ek2.key, config.n, config.t, share_rng);
  state.recv_ek1[party] = msg.ek_shares1[party - 1];
  state.recv_ek2[party] = msg.ek_shares2[party - 1];

  const size_t chunks = config.chunk_count();
  const size_t m = config.cipher.degree;
  Rng noise_rng = rng.fork(kNoiseDomain, party);
  Rng err_rng = rng.fork(kErrDomain, party);
  std::vector<RingPoly> noise_chunks;
  noise_chunks.reserve(chunks);
  for (size_t k = 0; k < chunks; ++k) {
    const RingPoly a = crs_polynomial(config, session_id, k);
    RingPoly s_chunk = chunk_of(message_share, k * m, m);
    RingPoly n_chunk =
        sample_smudging(noise_rng, m, config.msg_mod, config.smudge_bound);
    msg.share_cts.push_back(
        rlwe::sk_encrypt(ek1, s_chunk, a, config.cipher, err_rng));
    msg.noise_cts.push_back(
        rlwe::sk_encrypt(ek2, n_chunk, a, config.cipher, err_rng));
    noise_chunks.push_back(std::move(n_chunk));
  }
  state.smudge = concat(noise_chunks, config.msg_len);
  return msg;
}

shamir::LagrangeSet aggregator_round1(const Config& config,
                                      const std::vector<uint32_t>& arrivals) {
  if (arrivals.size() < config.t) {
    throw ProtocolError("insufficient participants in round 1");
  }
  std::vector<uint32_t> chosen = arrivals;
  if (!config.use_all_round1) chosen.resize(config.t);
  std::vector<uint32_t> points;
  points.reserve(chosen.size());
  for (uint32_t pid : chosen) points.push_back(shamir::point_of(pid));
  return shamir::lagrange_coeffs(points, config.msg_mod);
}

Round2PartyMsg party_round2(const Config& config, const PartyState& state,
                            const shamir::LagrangeSet& weights) {
  std::vector<shamir::Share> parts;
  std::vector<BigInt> w;
  for (size_t i = 0; i < weights.points.size(); ++i) {
    const uint32_t sender = weights.points[i];
    auto it1 = state.recv_ek1.find(sender);
    auto it2 = state.recv_ek2.find(sender);
    if (it1 == state.recv_ek1.end() || it2 == state.recv_ek2.end()) {
      throw ProtocolError("missing key share from a round-1 participant");
    }
    parts.push_back(it1->second);
    w.push_back(weights.coeffs[i]);
    parts.push_back(it2->second);
    w.push_back(BigInt(1));
  }
  (void)config;
  return Round2PartyMsg{shamir::linear_combine(parts, w)};
}

RingPoly aggregator_round2(
    const Config& config,
    const std::map<uint32_t, Round1PartyMsg>& round1_from_t,
    const shamir::LagrangeSet& weights,
    const std::vector<shamir::Share>& dk_shares) {
  if (dk_shares.size() < config.t) {
    throw ProtocolError("insufficient participants in round 2");
  }
  const RingPoly dk_poly = shamir::rec(dk_shares, config.t);
  const rlwe::SecretKey dk{dk_poly};

  const size_t chunks = config.chunk_count();
  std::vector<RingPoly> out_chunks;
  out_chunks.reserve(chunks);
  for (size_t k = 0; k < chunks; ++k) {
    std::vector<const rlwe::RlweCiphertext*> cts;
    std::vector<BigInt> w;
    for (size_t i = 0; i < weights.points.size(); ++i) {
      const auto it = round1_from_t.find(weights.points[i]);
      if (it == round1_from_t.end()) {
        throw ProtocolError("missing ciphertexts for a weighted participant");
      }
      cts.push_back(&it->second.share_cts[k]);
      w.push_back(weights.coeffs[i]);
      cts.push_back(&it->second.noise_cts[k]);
      w.push_back(BigInt(1));
    }
    const rlwe::RlweCiphertext all = rlwe::combine_weighted(cts, w);
    out_chunks.push_back(rlwe::decrypt(dk, all, config.cipher));
  }
  return concat(out_chunks, config.msg_len);
}

RingPoly run_direct(const Config& config,
                    const std::vector<shamir::Share>& message_shares,
                    uint64_t session_seed,
                    std::map<uint32_t, RingPoly>* noise_out) {
  if (message_shares.size() != config.n) {
    throw ParamError("need one message share per party");
  }
  Rng session_rng(session_seed);
  std::vector<PartyState> states(config.n);
  std::map<uint32_t, Round1PartyMsg> round1;
  std::vector<uint32_t> arrivals;
  for (uint32_t pid = 1; pid <= config.n; ++pid) {
    Rng rng = session_rng.fork(pid);
    round1[pid] = party_round1(config, pid, message_shares[pid - 1].payload,
                               session_seed, rng, states[pid - 1]);
    arrivals.push_back(pid);
  }
  // deliver key shares
  for (uint32_t sender = 1; sender <= config.n; ++sender) {
    for (uint32_t recv = 1; recv <= config.n; ++recv) {
      if (sender == recv) continue;
      states[recv - 1].recv_ek1[sender] = round1[sender].ek_shares1[recv - 1];
      states[recv - 1].recv_ek2[sender] = round1[sender].ek_shares2[recv - 1];
    }
  }
  shamir::LagrangeSet weights = aggregator_round1(config, arrivals);
  std::vector<shamir::Share> dk_shares;
  for (uint32_t pid = 1; pid <= config.t; ++pid) {
    dk_shares.push_back(
        party_round2(config, states[pid - 1], weights).dk_share);
  }
  if (noise_out) {
    for (uint32_t pid : weights.points) {
      (*noise_out)[pid] = states[pid - 1].smudge;
    }
  }
  std::map<uint32_t, Round1PartyMsg> from_t;
  for (uint32_t pid : weights.points) from_t[pid] = std::move(round1[pid]);
  return aggregator_round2(config, from_t, weights, dk_shares);
}

// ---- scheme adapter ---------------------------------------------------------

namespace {

std::vector<uint8_t> encode_ek_shares(const shamir::Share& s1,
                                      const shamir::Share& s2) {
  std::vector<uint8_t> body;
  put_coeffs(body, s1.payload);
  put_coeffs(body, s2.payload);
  return body;
}

std::vector<uint8_t> encode_cts(const std::vector<rlwe::RlweCiphertext>& a,
                                const std::vector<rlwe::RlweCiphertext>& b) {
  std::vector<uint8_t> body;
  put_u32(body, static_cast<uint32_t>(a.size()));
  for (size_t k = 0; k < a.size(); ++k) {
    put_coeffs(body, a[k].c0);
    put_coeffs(body, a[k].c1);
    put_coeffs(body, b[k].c0);
    put_coeffs(body, b[k].c1);
  }
  return body;
}

std::vector<uint8_t> encode_lagrange(const shamir::LagrangeSet& weights) {
  std::vector<uint8_t> body;
  put_u32(body, static_cast<uint32_t>(weights.points.size()));
  for (size_t i = 0; i < weights.points.size(); ++i) {
    put_u32(body, weights.points[i]);
    RingPoly one(weights.mod, 1);
    one.set_coeff(0, weights.coeffs[i]);
    put_coeffs(body, one);
  }
  return body;
}

shamir::LagrangeSet decode_lagrange(const std::vector<uint8_t>& body,
                                    const Modulus& mod) {
  ByteReader r(body);
  shamir::LagrangeSet out;
  out.mod = mod;
  const uint32_t count = r.get_u32();
  for (uint32_t i = 0; i < count; ++i) {
    out.points.push_back(r.get_u32());
    out.coeffs.push_back(r.get_coeffs(mod).coeff(0));
  }
  return out;
}

class AtassesSession final : public ApproxSession {
 public:
  AtassesSession(const Config& config, std::vector<PartyShare> shares,
                 uint64_t seed)
      : config_(config),
        shares_(std::move(shares)),
        session_rng_(seed),
        session_id_(seed) {
    states_.resize(config_.n);
  }

  void party_round(uint32_t round, uint32_t pid, const Inbox& inbox,
                   MsgSink& out) override {
    if (round == 1) {
      Rng rng = session_rng_.fork(pid);
      RingPoly payload = shares_[pid - 1].pieces[0];
      Round1PartyMsg msg = party_round1(config_, pid, payload, session_id_, rng,
                                        states_[pid - 1]);
      has_state_[pid] = true;
      ops_.ring_mults += 2 * config_.chunk_count();
      ops_.shares_created += 2 * config_.n;
      for (uint32_t j = 1; j <= config_.n; ++j) {
        if (j == pid) continue;
        out.send(static_cast<int32_t>(j), MsgKind::kEkShare,
                 encode_ek_shares(msg.ek_shares1[j - 1], msg.ek_shares2[j - 1]));
      }
      out.send(0, MsgKind::kShareCts, encode_cts(msg.share_cts, msg.noise_cts));
      return;
    }
    // round 2: assemble state from delivered key shares + broadcast weights
    PartyState state = has_state_.count(pid) ? states_[pid - 1] : PartyState{};
    state.id = pid;
    const shamir::LagrangeSet* weights = nullptr;
    shamir::LagrangeSet parsed;
    for (const auto& m : inbox) {
      if (m.kind == MsgKind::kEkShare) {
        ByteReader r(*m.body);
        shamir::Share s1{shamir::point_of(pid), r.get_coeffs(config_.cipher.q)};
        shamir::Share s2{shamir::point_of(pid), r.get_coeffs(config_.cipher.q)};
        state.recv_ek1[static_cast<uint32_t>(m.from)] = std::move(s1);
        state.recv_ek2[static_cast<uint32_t>(m.from)] = std::move(s2);
      } else if (m.kind == MsgKind::kLagrange) {
        parsed = decode_lagrange(*m.body, config_.msg_mod);
        weights = &parsed;
      }
    }
    if (!weights) throw ProtocolError("no recovery weights delivered");
    Round2PartyMsg msg = party_round2(config_, state, *weights);
    std::vector<uint8_t> body;
    put_u32(body, msg.dk_share.point);
    put_coeffs(body, msg.dk_share.payload);
    out.send(0, MsgKind::kDkShare, std::move(body));
  }

  void aggregator_round(uint32_t round, const Inbox& inbox,
                        MsgSink& out) override {
    if (round == 1) {
      std::vector<uint32_t> arrivals;
      for (const auto& m : inbox) {
        if (m.kind != MsgKind::kShareCts) continue;
        const uint32_t pid = static_cast<uint32_t>(m.from);
        ByteReader r(*m.body);
        const uint32_t chunks = r.get_u32();
        if (chunks != config_.chunk_count()) continue;  // incomplete upload
        Round1PartyMsg parsed;
        for (uint32_t k = 0; k < chunks; ++k) {
          rlwe::RlweCiphertext cs, cn;
          cs.c0 = r.get_coeffs(config_.cipher.q);
          cs.c1 = r.get_coeffs(config_.cipher.q);
          cn.c0 = r.get_coeffs(config_.cipher.q);
          cn.c1 = r.get_coeffs(config_.cipher.q);
          parsed.share_cts.push_back(std::move(cs));
          parsed.noise_cts.push_back(std::move(cn));
        }
        cts_[pid] = std::move(parsed);
        arrivals.push_back(pid);
      }
      if (arrivals.size() < config_.t) {
        abort_("insufficient participants in round 1");
        return;
      }
      weights_ = aggregator_round1(config_, arrivals);
      log_.round1_set = weights_.points;
      for (uint32_t pid : weights_.points) {
        log_.noise_log[pid][0] = states_[pid - 1].smudge;
      }
      std::vector<uint8_t> body = encode_lagrange(weights_);
      for (uint32_t j = 1; j <= config_.n; ++j) {
        out.send(static_cast<int32_t>(j), MsgKind::kLagrange,
                 std::vector<uint8_t>(body));
      }
      // release ciphertexts outside the participant set
      for (auto it = cts_.begin(); it != cts_.end();) {
        const bool used = std::find(weights_.points.begin(),
                                    weights_.points.end(),
                                    it->first) != weights_.points.end();
        it = used ? std::next(it) : cts_.erase(it);
      }
      return;
    }
    std::vector<shamir::Share> dk_shares;
    std::vector<uint32_t> t2;
    for (const auto& m : inbox) {
      if (m.kind != MsgKind::kDkShare) continue;
      if (dk_shares.size() == config_.t) break;
      ByteReader r(*m.body);
      shamir::Share s;
      s.point = r.get_u32();
      s.payload = r.get_coeffs(config_.cipher.q);
      dk_shares.push_back(std::move(s));
      t2.push_back(static_cast<uint32_t>(m.from));
    }
    if (dk_shares.size() < config_.t) {
      abort_("insufficient participants in round 2");
      return;
    }
    log_.round2_set = t2;
    output_ = aggregator_round2(config_, cts_, weights_, dk_shares);
    ops_.ring_mults += config_.chunk_count();
    done_ = true;
  }

  bool aborted() const override { return aborted_; }
  const std::string& abort_reason() const override { return reason_; }
  const RingPoly& output() const override {
    if (!done_) throw ProtocolError("session has no output");
    return output_;
  }
  const SessionLog& log() const override { return log_; }
  const OpCounters& ops() const override { return ops_; }

 private:
  void abort_(const std::string& why) {
    aborted_ = true;
    reason_ = why;
  }

  Config config_;
  std::vector<PartyShare> shares_;
  Rng session_rng_;
  uint64_t session_id_;
  std::vector<PartyState> states_;
  std::map<uint32_t, bool> has_state_;
  std::map<uint32_t, Round1PartyMsg> cts_;
  shamir::LagrangeSet weights_;
  RingPoly output_;
  SessionLog log_;
  OpCounters ops_;
  bool aborted_ = false;
  bool done_ = false;
  std::string reason_;
};

class AtassesScheme final : public ApproxScheme {
 public:
  explicit AtassesScheme(Config config) : config_(std::move(config)) {
    config_.validate();
    space_ = MsgSpace{config_.msg_mod, config_.msg_len};
  }

  std::string name() const override { return "atasses"; }
  uint32_t parties() const override { return config_.n; }
  uint32_t threshold() const override { return config_.t; }
  uint32_t round_count() const override { return 2; }
  const MsgSpace& message_space() const override { return space_; }
  BigInt recovery_bound() const override {
    return BigInt(config_.t) * config_.smudge_bound;
  }

  std::vector<PartyShare> share(const RingPoly& msg, Rng& rng) const override {
    auto shares = shamir::share(msg, config_.n, config_.t, rng);
    std::vector<PartyShare> out(config_.n);
    for (uint32_t i = 0; i < config_.n; ++i) {
      out[i].party = i + 1;
      out[i].labels = {0};
      out[i].pieces = {std::move(shares[i].payload)};
    }
    return out;
  }

  std::unique_ptr<ApproxSession> open_session(std::vector<PartyShare> shares,
                                              uint64_t seed) const override {
    return std::make_unique<AtassesSession>(config_, std::move(shares), seed);
  }

  const Config& config() const { return config_; }

 private:
  Config config_;
  MsgSpace space_;
};

}  // namespace

std::unique_ptr<ApproxScheme> make_scheme(Config config) {
  return std::make_unique<AtassesScheme>(std::move(config));
}

}  // namespace atasses
}  // namespace atss
