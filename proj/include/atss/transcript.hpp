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

#ifndef ATSS_TRANSCRIPT_HPP_
#define ATSS_TRANSCRIPT_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

namespace atss {

enum class MsgKind : uint8_t {
  kEkShare,      // party -> party key-share material
  kShareCts,     // party -> aggregator ciphertext upload
  kLagrange,     // aggregator -> party broadcast of recovery weights
  kDkShare,      // party -> aggregator decryption key share
  kNoisyShare,   // party -> aggregator noisy share (one-round schemes)
  kNoiseShare,   // party -> party coordinated-noise share
  kNoisySubmit,  // party -> aggregator coordinated noisy submission
};

const char* to_string(MsgKind kind);

// Actor id 0 is the aggregator; parties are 1..N.
struct Event {
  uint32_t round = 0;
  int32_t sender = 0;
  int32_t receiver = 0;
  MsgKind kind = MsgKind::kNoisyShare;
  uint64_t bytes = 0;

  bool operator==(const Event&) const = default;
};

struct OpCounters {
  uint64_t ring_mults = 0;
  uint64_t shares_created = 0;

  OpCounters& operator+=(const OpCounters& o) {
    ring_mults += o.ring_mults;
    shares_created += o.shares_created;
    return *this;
  }
};

// Ordered record of every message of one protocol run; byte_len is the exact
// serialized payload length.
class ProtocolTranscript {
 public:
  void record(const Event& e) { events_.push_back(e); }
  const std::vector<Event>& events() const { return events_; }
  OpCounters& ops() { return ops_; }
  const OpCounters& ops() const { return ops_; }
  uint32_t rounds() const;

  // Line-delimited export: round,sender,receiver,kind,bytes.
  void write_lines(std::ostream& os) const;

  bool operator==(const ProtocolTranscript& o) const {
    return ops_.ring_mults == o.ops_.ring_mults &&
           ops_.shares_created == o.ops_.shares_created &&
           events_ == o.events_;
  }

 private:
  std::vector<Event> events_;
  OpCounters ops_;
};

// Byte accounting over a finished transcript.
struct ComplexityReport {
  uint32_t rounds = 0;
  uint64_t total_bytes = 0;
  uint64_t party_to_party_bytes = 0;
  uint64_t party_to_agg_bytes = 0;
  uint64_t agg_to_party_bytes = 0;
  std::map<int32_t, uint64_t> sent_by_actor;
  std::map<int32_t, uint64_t> p2p_sent_by_party;
  std::map<int32_t, uint64_t> p2agg_sent_by_party;
  std::map<MsgKind, uint64_t> bytes_by_kind;
  // Per the per-pair parallel channel model: sum over rounds of the busiest
  // single (sender, receiver) link in that round. Drives the emulated
  // communication time.
  uint64_t serial_link_bytes = 0;
  OpCounters ops;

  uint64_t p2p_of(int32_t party) const;
  uint64_t p2agg_of(int32_t party) const;
  uint64_t kind_bytes(MsgKind kind) const;

  void write_csv(std::ostream& os) const;
};

ComplexityReport measure(const ProtocolTranscript& transcript);

}  // namespace atss

#endif  // ATSS_TRANSCRIPT_HPP_
