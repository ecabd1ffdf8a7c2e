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

#ifndef ATSS_APPROX_HPP_
#define ATSS_APPROX_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "atss/ring.hpp"
#include "atss/rng.hpp"
#include "atss/transcript.hpp"

namespace atss {

// Common surface for the four approximate secret sharing schemes (ATASSES and
// the three baselines): Share plus a round-structured approximate-recovery
// session that the simulation harness drives. Protocol code never sees the
// dropout schedule; it only observes which messages arrived.

struct MsgSpace {
  Modulus mod;
  size_t len = 0;  // K coefficients
};

// One party's share of a message: labeled coefficient vectors. Shamir-style
// schemes use a single piece with label 0; the replicated scheme holds one
// piece per (T-1)-subset it belongs to.
struct PartyShare {
  uint32_t party = 0;
  std::vector<uint32_t> labels;
  std::vector<RingPoly> pieces;
};

struct WireMsg {
  uint32_t round = 0;
  int32_t from = 0;
  int32_t to = 0;
  MsgKind kind = MsgKind::kNoisyShare;
  std::shared_ptr<const std::vector<uint8_t>> body;
};

class MsgSink {
 public:
  virtual ~MsgSink() = default;
  virtual void send(int32_t to, MsgKind kind, std::vector<uint8_t> body) = 0;
};

using Inbox = std::vector<WireMsg>;

// What a finished session logged for test oracles: the participant sets it
// acted on and every noise a party injected (keyed party -> piece label).
struct SessionLog {
  std::vector<uint32_t> round1_set;  // T
  std::vector<uint32_t> round2_set;  // T2 (two-round schemes)
  std::map<uint32_t, std::map<uint32_t, RingPoly>> noise_log;
};

class ApproxSession {
 public:
  virtual ~ApproxSession() = default;
  // Party `pid` acts in `round`; `inbox` holds everything delivered to it
  // from earlier rounds.
  virtual void party_round(uint32_t round, uint32_t pid, const Inbox& inbox,
                           MsgSink& out) = 0;
  // Aggregator step after the parties of `round`; sees arrivals only.
  virtual void aggregator_round(uint32_t round, const Inbox& inbox,
                                MsgSink& out) = 0;
  virtual bool aborted() const = 0;
  virtual const std::string& abort_reason() const = 0;
  virtual const RingPoly& output() const = 0;
  virtual const SessionLog& log() const = 0;
  virtual const OpCounters& ops() const = 0;
};

class ApproxScheme {
 public:
  virtual ~ApproxScheme() = default;
  virtual std::string name() const = 0;
  virtual uint32_t parties() const = 0;
  virtual uint32_t threshold() const = 0;
  virtual uint32_t round_count() const = 0;
  virtual const MsgSpace& message_space() const = 0;
  // M_B: ||m' - m|| bound guaranteed by approximate recovery.
  virtual BigInt recovery_bound() const = 0;
  virtual std::vector<PartyShare> share(const RingPoly& msg, Rng& rng) const = 0;
  virtual std::unique_ptr<ApproxSession> open_session(
      std::vector<PartyShare> shares, uint64_t session_seed) const = 0;

  // Linear structure hooks for embedding callers (decryption-share builds):
  // whether an additive constant belongs on every piece (Shamir-style,
  // recovery weights sum to one) or on a single designated piece (replicated,
  // unit weights count each piece once).
  virtual bool constant_on_every_piece() const { return true; }
  virtual uint32_t designated_constant_label() const { return 0; }
};

}  // namespace atss

#endif  // ATSS_APPROX_HPP_
