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

#ifndef ATSS_BENCH_HPP_
#define ATSS_BENCH_HPP_

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "atss/approx.hpp"
#include "atss/params_io.hpp"

namespace atss {
namespace bench {

// Sweeps (scheme, N, T, K) cells of the approximate-recovery protocols,
// emulating communication time as bytes over a fixed bandwidth, exactly as
// the running-time metric combines computation and transfer time.
struct BenchConfig {
  std::vector<std::string> schemes = {"atasses", "replicated", "type1",
                                      "type2"};
  std::vector<uint32_t> n_list = {10, 20, 50, 100};
  std::vector<double> t_fracs = {0.5, 0.7, 0.9};
  std::vector<uint32_t> k_mults = {5, 10, 15, 20};  // K = mult * M'
  uint32_t trials = 3;
  uint64_t seed = 1;
  double bandwidth_mbps = 98.0;
  std::string preset = "PN12QP109-compat";
  bool allow_large_n = false;   // permit N > 200
  std::string transcript_dir;   // per-cell transcript export when nonempty
  // capacity rules
  uint32_t type1_bit_budget = 512;       // refuse wider type-1 moduli
  uint64_t wire_budget = 6'000'000'000;  // refuse cells materializing more
};

struct BenchRow {
  std::string scheme;
  uint32_t n = 0;
  uint32_t t = 0;
  size_t k = 0;
  uint32_t trial = 0;
  double compute_seconds = 0.0;  // CPU seconds, aggregator + slowest party
  uint64_t comm_bytes = 0;       // serialized bytes on the busiest links
  double comm_seconds = 0.0;     // comm_bytes * 8 / (bandwidth * 1e6)
  double total_seconds = 0.0;
  std::string status = "ok";     // or "skipped:<rule>"
};

std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const params::ParamSet& params);

// Fixed column order: scheme,n,t,k,trial,compute_seconds,comm_bytes,
// comm_seconds,total_seconds,status.
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);
std::vector<BenchRow> read_csv(std::istream& is);

struct CellKey {
  std::string scheme;
  uint32_t n = 0;
  uint32_t t = 0;
  size_t k = 0;
  bool operator<(const CellKey& o) const;
};

struct Summary {
  std::map<CellKey, double> median_total;
  std::map<CellKey, double> median_compute;
  std::map<CellKey, uint64_t> comm_bytes;
  std::map<std::string, double> slope_vs_n;  // log-log fit per scheme
  std::map<std::string, double> slope_vs_k;
  std::vector<std::string> warnings;
};

Summary emit_summary(const std::vector<BenchRow>& rows);
void write_summary(std::ostream& os, const Summary& summary);

// Least-squares slope of log(y) against log(x); exposed for the synthetic
// self-tests.
double loglog_slope(const std::vector<std::pair<double, double>>& xy);

// Scheme instance used by one bench cell (also handy in tests).
std::unique_ptr<ApproxScheme> build_scheme(const std::string& name, uint32_t n,
                                           uint32_t t, size_t msg_len,
                                           const params::ParamSet& params);

}  // namespace bench
}  // namespace atss

#endif  // ATSS_BENCH_HPP_
