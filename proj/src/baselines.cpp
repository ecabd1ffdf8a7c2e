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

#include "atss/baselines.hpp"

#include <algorithm>

#include "atss/errors.hpp"
#include "atss/serialize.hpp"
#include "atss/shamir.hpp"

namespace atss {
namespace baselines {
namespace {

constexpr uint64_t kNoiseDomain = 0x424c4e5f6e6f6973ULL;

void check_common(uint32_t n, uint32_t t, const Modulus& mod) {
  if (t < 1 || t > n) throw ParamError("need 1 <= T <= N");
  if (!mod.is_prime()) throw ParamError("message modulus must be prime");
  if (from_u64(n) >= mod.value()) {
    throw ParamError("party count must stay below the message modulus");
  }
}

std::vector<uint8_t> encode_share(uint32_t point, const RingPoly& payload) {
  std::vector<uint8_t> body;
  put_u32(body, point);
  put_coeffs(body, payload);
  return body;
}

}  // namespace

// ---- replicated -------------------------------------------------------------

void ReplicatedConfig::validate() const {
  check_common(n, t, msg_mod);
  if (msg_len == 0) throw ParamError("empty message space");
  if (n > 20) throw ParamError("replicated sharing capped at N = 20 parties");
  if (smudge_bound < 0) throw ParamError("negative smudging bound");
}

std::vector<std::vector<uint32_t>> subset_labels(uint32_t n, uint32_t t) {
  const uint32_t k = t - 1;
  std::vector<std::vector<uint32_t>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<uint32_t> cur(k);
  for (uint32_t i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    // next lexicographic k-combination of 1..n
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - static_cast<uint32_t>(i))) --i;
    if (i < 0) break;
    ++cur[i];
    for (uint32_t j = static_cast<uint32_t>(i) + 1; j < k; ++j) {
      cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

namespace {

class ReplicatedSession final : public ApproxSession {
 public:
  ReplicatedSession(const ReplicatedConfig& config,
                    std::vector<PartyShare> shares, uint64_t seed)
      : config_(config), shares_(std::move(shares)), rng_(seed) {
    subsets_ = subset_labels(config_.n, config_.t);
  }

  void party_round(uint32_t round, uint32_t pid, const Inbox&,
                   MsgSink& out) override {
    (void)round;
    const PartyShare& mine = shares_[pid - 1];
    Rng rng = rng_.fork(kNoiseDomain, pid);
    std::vector<uint8_t> body;
    put_u32(body, static_cast<uint32_t>(mine.labels.size()));
    for (size_t i = 0; i < mine.labels.size(); ++i) {
      RingPoly noise = sample_smudging(rng, config_.msg_len, config_.msg_mod,
                                       config_.smudge_bound);
      RingPoly noisy = poly_add(mine.pieces[i], noise);
      put_u32(body, mine.labels[i]);
      put_coeffs(body, noisy);
      log_.noise_log[pid][mine.labels[i]] = std::move(noise);
    }
    out.send(0, MsgKind::kNoisyShare, std::move(body));
  }

  void aggregator_round(uint32_t, const Inbox& inbox, MsgSink&) override {
    std::vector<uint32_t> chosen;
    std::map<uint32_t, std::map<uint32_t, RingPoly>> pieces;
    for (const auto& m : inbox) {
      if (m.kind != MsgKind::kNoisyShare) continue;
      if (chosen.size() == config_.t) break;
      const uint32_t pid = static_cast<uint32_t>(m.from);
      ByteReader r(*m.body);
      const uint32_t count = r.get_u32();
      for (uint32_t i = 0; i < count; ++i) {
        const uint32_t label = r.get_u32();
        pieces[pid][label] = r.get_coeffs(config_.msg_mod);
      }
      chosen.push_back(pid);
    }
    if (chosen.size() < config_.t) {
      aborted_ = true;
      reason_ = "insufficient participants";
      return;
    }
    log_.round1_set = chosen;
    // keep only noises of selected contributors in the log
    std::map<uint32_t, std::map<uint32_t, RingPoly>> kept;
    RingPoly acc(config_.msg_mod, config_.msg_len);
    for (uint32_t label = 0; label < subsets_.size(); ++label) {
      const auto& subset = subsets_[label];
      uint32_t holder = 0;
      for (uint32_t pid : chosen) {
        if (std::find(subset.begin(), subset.end(), pid) == subset.end()) {
          holder = holder == 0 ? pid : std::min(holder, pid);
        }
      }
      if (holder == 0) {
        aborted_ = true;
        reason_ = "piece without holder in the participant set";
        return;
      }
      acc = poly_add(acc, pieces[holder][label]);
      kept[holder][label] = log_.noise_log[holder][label];
    }
    log_.noise_log = std::move(kept);
    output_ = std::move(acc);
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
  ReplicatedConfig config_;
  std::vector<PartyShare> shares_;
  Rng rng_;
  std::vector<std::vector<uint32_t>> subsets_;
  RingPoly output_;
  SessionLog log_;
  OpCounters ops_;
  bool aborted_ = false;
  bool done_ = false;
  std::string reason_;
};

class ReplicatedScheme final : public ApproxScheme {
 public:
  explicit ReplicatedScheme(ReplicatedConfig config)
      : config_(std::move(config)) {
    config_.validate();
    space_ = MsgSpace{config_.msg_mod, config_.msg_len};
    subsets_ = subset_labels(config_.n, config_.t);
  }

  std::string name() const override { return "replicated"; }
  uint32_t parties() const override { return config_.n; }
  uint32_t threshold() const override { return config_.t; }
  uint32_t round_count() const override { return 1; }
  const MsgSpace& message_space() const override { return space_; }
  BigInt recovery_bound() const override {
    return binomial(config_.n, config_.t - 1) * config_.smudge_bound;
  }

  std::vector<PartyShare> share(const RingPoly& msg, Rng& rng) const override {
    // uniform additive parts, one per (T-1)-subset, summing to the secret
    std::vector<RingPoly> parts(subsets_.size());
    RingPoly sum(config_.msg_mod, config_.msg_len);
    for (size_t s = 0; s + 1 < subsets_.size(); ++s) {
      parts[s] = sample_uniform(rng, config_.msg_len, config_.msg_mod);
      sum = poly_add(sum, parts[s]);
    }
    parts.back() = poly_sub(msg, sum);

    std::vector<PartyShare> out(config_.n);
    for (uint32_t pid = 1; pid <= config_.n; ++pid) {
      out[pid - 1].party = pid;
      for (uint32_t label = 0; label < subsets_.size(); ++label) {
        const auto& subset = subsets_[label];
        if (std::find(subset.begin(), subset.end(), pid) == subset.end()) {
          out[pid - 1].labels.push_back(label);
          out[pid - 1].pieces.push_back(parts[label]);
        }
      }
    }
    return out;
  }

  std::unique_ptr<ApproxSession> open_session(std::vector<PartyShare> shares,
                                              uint64_t seed) const override {
    return std::make_unique<ReplicatedSession>(config_, std::move(shares),
                                               seed);
  }

  bool constant_on_every_piece() const override { return false; }
  uint32_t designated_constant_label() const override { return 0; }

 private:
  ReplicatedConfig config_;
  MsgSpace space_;
  std::vector<std::vector<uint32_t>> subsets_;
};

}  // namespace

std::unique_ptr<ApproxScheme> make_replicated(ReplicatedConfig config) {
  return std::make_unique<ReplicatedScheme>(std::move(config));
}

// ---- Type-I -----------------------------------------------------------------

void Type1Config::validate() const {
  check_common(n, t, msg_mod);
  if (msg_len == 0) throw ParamError("empty message space");
  if (smudge_bound < 0) throw ParamError("negative smudging bound");
  const BigInt needed = 2 * BigInt(n) * factorial(n) * factorial(n) *
                            factorial(n) * smudge_bound;
  if (msg_mod.value() <= needed) {
    throw ParamError("type-1 modulus below 2 N (N!)^3 B_sm");
  }
}

BigInt type1_modulus(uint32_t n, const BigInt& smudge_bound,
                     const BigInt& at_least) {
  const BigInt f = factorial(n);
  BigInt bound = 2 * BigInt(n) * f * f * f * smudge_bound;
  if (bound < at_least) bound = at_least;
  return next_prime_above(bound);
}

BigInt type1_weight(const std::vector<uint32_t>& points, size_t index,
                    uint32_t n) {
  BigInt num = factorial(n);
  BigInt den = 1;
  const BigInt xi = points[index];
  for (size_t j = 0; j < points.size(); ++j) {
    if (j == index) continue;
    num *= points[j];
    den *= BigInt(points[j]) - xi;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw ParamError("cleared-denominator weight is not integral");
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

namespace {

class Type1Session final : public ApproxSession {
 public:
  Type1Session(const Type1Config& config, std::vector<PartyShare> shares,
               uint64_t seed)
      : config_(config), shares_(std::move(shares)), rng_(seed) {}

  void party_round(uint32_t, uint32_t pid, const Inbox&,
                   MsgSink& out) override {
    Rng rng = rng_.fork(kNoiseDomain, pid);
    RingPoly u = sample_bounded(rng, config_.msg_len, config_.msg_mod,
                                config_.smudge_bound);
    RingPoly scaled = poly_scalar_mul(factorial(config_.n), u);
    RingPoly noisy = poly_add(shares_[pid - 1].pieces[0], scaled);
    out.send(0, MsgKind::kNoisyShare,
             encode_share(shamir::point_of(pid), noisy));
    log_.noise_log[pid][0] = std::move(u);
  }

  void aggregator_round(uint32_t, const Inbox& inbox, MsgSink&) override {
    std::vector<uint32_t> points;
    std::vector<RingPoly> noisy;
    for (const auto& m : inbox) {
      if (m.kind != MsgKind::kNoisyShare) continue;
      if (points.size() == config_.t) break;
      ByteReader r(*m.body);
      points.push_back(r.get_u32());
      noisy.push_back(r.get_coeffs(config_.msg_mod));
    }
    if (points.size() < config_.t) {
      aborted_ = true;
      reason_ = "insufficient participants";
      return;
    }
    log_.round1_set = points;
    std::map<uint32_t, std::map<uint32_t, RingPoly>> kept;
    for (uint32_t pid : points) kept[pid][0] = log_.noise_log[pid][0];
    log_.noise_log = std::move(kept);
    // v = sum_i (N! L_i) y_i = N! (m + noise); divide by N! afterwards
    RingPoly v(config_.msg_mod, config_.msg_len);
    for (size_t i = 0; i < points.size(); ++i) {
      add_scaled(v, type1_weight(points, i, config_.n), noisy[i]);
    }
    const BigInt inv_fact =
        mod_inverse(factorial(config_.n), config_.msg_mod.value());
    output_ = poly_scalar_mul(inv_fact, v);
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
  Type1Config config_;
  std::vector<PartyShare> shares_;
  Rng rng_;
  RingPoly output_;
  SessionLog log_;
  OpCounters ops_;
  bool aborted_ = false;
  bool done_ = false;
  std::string reason_;
};

class Type1Scheme final : public ApproxScheme {
 public:
  explicit Type1Scheme(Type1Config config) : config_(std::move(config)) {
    config_.validate();
    space_ = MsgSpace{config_.msg_mod, config_.msg_len};
  }

  std::string name() const override { return "type1"; }
  uint32_t parties() const override { return config_.n; }
  uint32_t threshold() const override { return config_.t; }
  uint32_t round_count() const override { return 1; }
  const MsgSpace& message_space() const override { return space_; }
  BigInt recovery_bound() const override {
    const BigInt f = factorial(config_.n);
    return BigInt(config_.n) * f * f * f * config_.smudge_bound;
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
    return std::make_unique<Type1Session>(config_, std::move(shares), seed);
  }

 private:
  Type1Config config_;
  MsgSpace space_;
};

}  // namespace

std::unique_ptr<ApproxScheme> make_type1(Type1Config config) {
  return std::make_unique<Type1Scheme>(std::move(config));
}

// ---- Type-II ----------------------------------------------------------------

void Type2Config::validate() const {
  check_common(n, t, msg_mod);  // zero-length messages are legal here
  if (smudge_bound < 0) throw ParamError("negative smudging bound");
}

namespace {

class Type2Session final : public ApproxSession {
 public:
  Type2Session(const Type2Config& config, std::vector<PartyShare> shares,
               uint64_t seed)
      : config_(config), shares_(std::move(shares)), rng_(seed) {
    own_noise_share_.resize(config_.n);
  }

  void party_round(uint32_t round, uint32_t pid, const Inbox& inbox,
                   MsgSink& out) override {
    if (round == 1) {
      Rng rng = rng_.fork(kNoiseDomain, pid);
      RingPoly nu = sample_smudging(rng, config_.msg_len, config_.msg_mod,
                                    config_.smudge_bound);
      Rng share_rng = rng_.fork(kNoiseDomain ^ 1, pid);
      auto nu_shares = shamir::share(nu, config_.n, config_.t, share_rng);
      ops_.shares_created += config_.n;
      for (uint32_t j = 1; j <= config_.n; ++j) {
        if (j == pid) {
          own_noise_share_[pid - 1] = nu_shares[j - 1].payload;
          has_own_[pid] = true;
          continue;
        }
        out.send(static_cast<int32_t>(j), MsgKind::kNoiseShare,
                 encode_share(nu_shares[j - 1].point, nu_shares[j - 1].payload));
      }
      log_.noise_log[pid][0] = std::move(nu);
      log_.round1_set.push_back(pid);  // noise contributors
      return;
    }
    // round 2: coordinated noise = sum of every delivered noise share
    RingPoly n_j(config_.msg_mod, config_.msg_len);
    for (const auto& m : inbox) {
      if (m.kind != MsgKind::kNoiseShare) continue;
      ByteReader r(*m.body);
      r.get_u32();  // point equals own
      n_j = poly_add(n_j, r.get_coeffs(config_.msg_mod));
    }
    if (has_own_.count(pid)) n_j = poly_add(n_j, own_noise_share_[pid - 1]);
    RingPoly noisy = poly_add(shares_[pid - 1].pieces[0], n_j);
    out.send(0, MsgKind::kNoisySubmit,
             encode_share(shamir::point_of(pid), noisy));
  }

  void aggregator_round(uint32_t round, const Inbox& inbox,
                        MsgSink&) override {
    if (round == 1) {
      // noise sharing is party-to-party; nothing addresses the aggregator,
      // and the harness enforces the per-round participant threshold
      return;
    }
    std::vector<shamir::Share> submissions;
    std::vector<uint32_t> t2;
    for (const auto& m : inbox) {
      if (m.kind != MsgKind::kNoisySubmit) continue;
      if (submissions.size() == config_.t) break;
      ByteReader r(*m.body);
      shamir::Share s;
      s.point = r.get_u32();
      s.payload = r.get_coeffs(config_.msg_mod);
      submissions.push_back(std::move(s));
      t2.push_back(static_cast<uint32_t>(m.from));
    }
    if (submissions.size() < config_.t) {
      aborted_ = true;
      reason_ = "insufficient participants in round 2";
      return;
    }
    log_.round2_set = t2;
    output_ = shamir::rec(submissions, config_.t);
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
  Type2Config config_;
  std::vector<PartyShare> shares_;
  Rng rng_;
  std::vector<RingPoly> own_noise_share_;
  std::map<uint32_t, bool> has_own_;
  RingPoly output_;
  SessionLog log_;
  OpCounters ops_;
  bool aborted_ = false;
  bool done_ = false;
  std::string reason_;
};

class Type2Scheme final : public ApproxScheme {
 public:
  explicit Type2Scheme(Type2Config config) : config_(std::move(config)) {
    config_.validate();
    space_ = MsgSpace{config_.msg_mod, config_.msg_len};
  }

  std::string name() const override { return "type2"; }
  uint32_t parties() const override { return config_.n; }
  uint32_t threshold() const override { return config_.t; }
  uint32_t round_count() const override { return 2; }
  const MsgSpace& message_space() const override { return space_; }
  BigInt recovery_bound() const override {
    return BigInt(config_.n) * config_.smudge_bound;
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
    return std::make_unique<Type2Session>(config_, std::move(shares), seed);
  }

 private:
  Type2Config config_;
  MsgSpace space_;
};

}  // namespace

std::unique_ptr<ApproxScheme> make_type2(Type2Config config) {
  return std::make_unique<Type2Scheme>(std::move(config));
}

}  // namespace baselines
}  // namespace atss
