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

#include "atss/transcript.hpp"

#include <algorithm>

namespace atss {

const char* to_string(MsgKind kind) {
  switch (kind) {
    case MsgKind::kEkShare: return "ek_share";
    case MsgKind::kShareCts: return "share_cts";
    case MsgKind::kLagrange: return "lagrange";
    case MsgKind::kDkShare: return "dk_share";
    case MsgKind::kNoisyShare: return "noisy_share";
    case MsgKind::kNoiseShare: return "noise_share";
    case MsgKind::kNoisySubmit: return "noisy_submit";
  }
  return "unknown";
}

uint32_t ProtocolTranscript::rounds() const {
  uint32_t r = 0;
  for (const auto& e : events_) r = std::max(r, e.round);
  return r;
}

void ProtocolTranscript::write_lines(std::ostream& os) const {
  for (const auto& e : events_) {
    os << e.round << ',' << e.sender << ',' << e.receiver << ','
       << to_string(e.kind) << ',' << e.bytes << '\n';
  }
}

uint64_t ComplexityReport::p2p_of(int32_t party) const {
  auto it = p2p_sent_by_party.find(party);
  return it == p2p_sent_by_party.end() ? 0 : it->second;
}

uint64_t ComplexityReport::p2agg_of(int32_t party) const {
  auto it = p2agg_sent_by_party.find(party);
  return it == p2agg_sent_by_party.end() ? 0 : it->second;
}

uint64_t ComplexityReport::kind_bytes(MsgKind kind) const {
  auto it = bytes_by_kind.find(kind);
  return it == bytes_by_kind.end() ? 0 : it->second;
}

void ComplexityReport::write_csv(std::ostream& os) const {
  os << "metric,key,value\n";
  os << "rounds,," << rounds << '\n';
  os << "total_bytes,," << total_bytes << '\n';
  os << "party_to_party_bytes,," << party_to_party_bytes << '\n';
  os << "party_to_agg_bytes,," << party_to_agg_bytes << '\n';
  os << "agg_to_party_bytes,," << agg_to_party_bytes << '\n';
  os << "serial_link_bytes,," << serial_link_bytes << '\n';
  os << "ring_mults,," << ops.ring_mults << '\n';
  os << "shares_created,," << ops.shares_created << '\n';
  for (const auto& [kind, bytes] : bytes_by_kind) {
    os << "bytes_by_kind," << to_string(kind) << ',' << bytes << '\n';
  }
  for (const auto& [actor, bytes] : sent_by_actor) {
    os << "sent_by_actor," << actor << ',' << bytes << '\n';
  }
}

ComplexityReport measure(const ProtocolTranscript& transcript) {
  ComplexityReport out;
  out.rounds = transcript.rounds();
  out.ops = transcript.ops();
  // busiest link per round
  std::map<uint32_t, std::map<std::pair<int32_t, int32_t>, uint64_t>> links;
  for (const auto& e : transcript.events()) {
    out.total_bytes += e.bytes;
    out.sent_by_actor[e.sender] += e.bytes;
    out.bytes_by_kind[e.kind] += e.bytes;
    links[e.round][{e.sender, e.receiver}] += e.bytes;
    if (e.sender == 0) {
      out.agg_to_party_bytes += e.bytes;
    } else if (e.receiver == 0) {
      out.party_to_agg_bytes += e.bytes;
      out.p2agg_sent_by_party[e.sender] += e.bytes;
    } else {
      out.party_to_party_bytes += e.bytes;
      out.p2p_sent_by_party[e.sender] += e.bytes;
    }
  }
  for (const auto& [round, by_link] : links) {
    uint64_t busiest = 0;
    for (const auto& [link, bytes] : by_link) busiest = std::max(busiest, bytes);
    out.serial_link_bytes += busiest;
  }
  return out;
}

}  // namespace atss
