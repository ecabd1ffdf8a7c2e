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

#include "atss/harness.hpp"

#include <ctime>

#include "atss/errors.hpp"
#include "atss/rng.hpp"

namespace atss {
namespace sim {

DropoutSchedule DropoutSchedule::none() { return DropoutSchedule(); }

DropoutSchedule DropoutSchedule::uninterested(std::set<uint32_t> absent) {
  DropoutSchedule s;
  s.mode_ = Mode::kUninterested;
  s.fixed_ = std::move(absent);
  return s;
}

DropoutSchedule DropoutSchedule::random_dropout(double p, uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw ParamError("dropout probability outside [0,1]");
  DropoutSchedule s;
  s.mode_ = Mode::kRandom;
  s.p_ = p;
  s.seed_ = seed;
  return s;
}

DropoutSchedule DropoutSchedule::targeted(
    std::vector<std::set<uint32_t>> per_round) {
  DropoutSchedule s;
  s.mode_ = Mode::kTargeted;
  s.per_round_ = std::move(per_round);
  return s;
}

bool DropoutSchedule::absent(uint32_t round, uint32_t pid) const {
  switch (mode_) {
    case Mode::kNone:
      return false;
    case Mode::kUninterested:
      return fixed_.count(pid) != 0;
    case Mode::kRandom: {
      Rng coin = Rng(seed_).fork(round, pid);
      return static_cast<double>(coin.next()) <
             p_ * static_cast<double>(UINT64_MAX);
    }
    case Mode::kTargeted:
      if (round == 0 || round > per_round_.size()) return false;
      return per_round_[round - 1].count(pid) != 0;
  }
  return false;
}

namespace {

class RecordingSink final : public MsgSink {
 public:
  RecordingSink(uint32_t round, int32_t from, ProtocolTranscript& transcript,
                std::map<int32_t, Inbox>& mailboxes)
      : round_(round), from_(from), transcript_(transcript),
        mailboxes_(mailboxes) {}

  void send(int32_t to, MsgKind kind, std::vector<uint8_t> body) override {
    WireMsg msg;
    msg.round = round_;
    msg.from = from_;
    msg.to = to;
    msg.kind = kind;
    msg.body = std::make_shared<const std::vector<uint8_t>>(std::move(body));
    transcript_.record(Event{round_, from_, to, kind, msg.body->size()});
    mailboxes_[to].push_back(std::move(msg));
  }

 private:
  uint32_t round_;
  int32_t from_;
  ProtocolTranscript& transcript_;
  std::map<int32_t, Inbox>& mailboxes_;
};

// Actors run one at a time in-process, so process CPU deltas attribute each
// step exactly (including its OpenMP workers) and stay meaningful on a
// machine with unrelated load.
double process_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

}  // namespace

RunResult run_session(const ApproxScheme& scheme,
                      std::vector<PartyShare> shares,
                      const DropoutSchedule& dropout, uint64_t seed,
                      const HarnessOptions& options) {
  (void)options;  // relay and direct topologies coincide in-process
  const uint32_t n = scheme.parties();
  const uint32_t t = scheme.threshold();
  const uint32_t rounds = scheme.round_count();
  if (shares.size() != n) throw ParamError("need one share per party");

  RunResult result;
  auto session = scheme.open_session(std::move(shares), seed);
  std::map<int32_t, Inbox> mailboxes;

  for (uint32_t round = 1; round <= rounds; ++round) {
    std::vector<uint32_t> participants;
    for (uint32_t pid = 1; pid <= n; ++pid) {
      if (!dropout.absent(round, pid)) participants.push_back(pid);
    }
    if (participants.size() < t) {
      result.aborted = true;
      result.abort_reason = "round " + std::to_string(round) +
                            " has fewer than T participants";
      break;
    }
    // Sends of round r stage here and deliver at end of round, so a party's
    // inbox never mixes in same-round traffic.
    std::map<int32_t, Inbox> staged;
    for (uint32_t pid : participants) {
      RecordingSink sink(round, static_cast<int32_t>(pid), result.transcript,
                         staged);
      Inbox delivered = std::move(mailboxes[static_cast<int32_t>(pid)]);
      mailboxes.erase(static_cast<int32_t>(pid));
      const double start = process_cpu_seconds();
      session->party_round(round, pid, delivered, sink);
      result.party_seconds[pid] += process_cpu_seconds() - start;
    }
    Inbox agg_inbox = std::move(staged[0]);
    staged.erase(0);
    for (auto& [actor, msgs] : staged) {
      auto& box = mailboxes[actor];
      box.insert(box.end(), std::make_move_iterator(msgs.begin()),
                 std::make_move_iterator(msgs.end()));
    }
    staged.clear();
    RecordingSink agg_sink(round, 0, result.transcript, staged);
    const double agg_start = process_cpu_seconds();
    session->aggregator_round(round, agg_inbox, agg_sink);
    result.aggregator_seconds += process_cpu_seconds() - agg_start;
    for (auto& [actor, msgs] : staged) {
      auto& box = mailboxes[actor];
      box.insert(box.end(), std::make_move_iterator(msgs.begin()),
                 std::make_move_iterator(msgs.end()));
    }
    if (session->aborted()) {
      result.aborted = true;
      result.abort_reason = session->abort_reason();
      break;
    }
  }

  if (!result.aborted) {
    result.output = session->output();
  }
  result.log = session->log();
  result.transcript.ops() = session->ops();
  for (const auto& [pid, secs] : result.party_seconds) {
    (void)pid;
    result.max_party_seconds = std::max(result.max_party_seconds, secs);
  }
  return result;
}

}  // namespace sim
}  // namespace atss
