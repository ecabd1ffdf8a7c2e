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

#ifndef ATSS_HARNESS_HPP_
#define ATSS_HARNESS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "atss/approx.hpp"
#include "atss/transcript.hpp"

namespace atss {
namespace sim {

// Per-round non-participation. A dropout is total for that round: the party
// sends nothing, while deliveries to its mailbox still happen. Protocol code
// never reads the schedule; it only observes arrivals.
class DropoutSchedule {
 public:
  static DropoutSchedule none();
  // Fixed set of parties absent from every round.
  static DropoutSchedule uninterested(std::set<uint32_t> absent);
  // Each party independently absent with probability p in each round.
  static DropoutSchedule random_dropout(double p, uint64_t seed);
  // Adversary-chosen per-round sets (index 0 = round 1).
  static DropoutSchedule targeted(std::vector<std::set<uint32_t>> per_round);

  bool absent(uint32_t round, uint32_t pid) const;

 private:
  enum class Mode { kNone, kUninterested, kRandom, kTargeted };
  Mode mode_ = Mode::kNone;
  std::set<uint32_t> fixed_;
  std::vector<std::set<uint32_t>> per_round_;
  double p_ = 0.0;
  uint64_t seed_ = 0;
};

struct HarnessOptions {
  // Route party-to-party traffic through the aggregator (the relay realizes
  // the delivery-consistency condition on participant sets). The direct
  // topology carries the same guarantee here because dropouts are total per
  // round; transcripts record logical sender/receiver either way.
  bool relay = true;
};

struct RunResult {
  bool aborted = false;
  std::string abort_reason;
  RingPoly output;
  ProtocolTranscript transcript;
  SessionLog log;
  // per-actor computation cost in process CPU seconds (actors execute one
  // at a time, so deltas attribute exactly and unrelated machine load does
  // not leak in)
  double aggregator_seconds = 0.0;
  double max_party_seconds = 0.0;
  std::map<uint32_t, double> party_seconds;
};

// Deterministic round-synchronous execution: schedules parties in id order,
// withholds messages of per-round non-participants, relays the rest, and
// captures the byte-accounted transcript. Aborts when a round has fewer than
// T participants — a legal outcome, not an error.
RunResult run_session(const ApproxScheme& scheme,
                      std::vector<PartyShare> shares,
                      const DropoutSchedule& dropout, uint64_t seed,
                      const HarnessOptions& options = {});

}  // namespace sim
}  // namespace atss

#endif  // ATSS_HARNESS_HPP_
