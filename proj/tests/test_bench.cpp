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

#include <cmath>
#include <map>
#include <sstream>

#include "atss/bench.hpp"
#include "atss/errors.hpp"

using namespace atss;

namespace {

params::ParamSet tiny_params() {
  params::ParamSet p;
  p.m = 4;
  p.q = 65537;
  p.p = 2;
  p.b = 1;
  p.b_sm = 8;
  p.n = 3;
  p.t = 2;
  p.m_inner = 4;
  p.q_inner = 0;
  p.p_inner = 65537;
  p.b_inner = 2;
  p.seed = 5;
  return p;
}

}  // namespace

TEST_CASE("parameter files parse, write, and reject junk") {
  std::istringstream in(
      "# comment\n"
      "m = 4096\n"
      "q = 65537  # message modulus\n"
      "p = 2\n"
      "b = 1\n"
      "b_sm = 65536\n"
      "n = 10\nt = 7\n"
      "m_inner = 4096\nq_inner = 0\np_inner = 65537\nb_inner = 16\n"
      "seed = 42\n");
  const auto p = params::parse(in);
  CHECK(p.m == 4096);
  CHECK(p.q == 65537);
  CHECK(p.b_sm == 65536);
  CHECK(p.seed == 42);

  std::ostringstream out;
  params::write(out, p);
  std::istringstream again(out.str());
  const auto p2 = params::parse(again);
  CHECK(p2.q_inner == p.q_inner);
  CHECK(p2.n == p.n);

  std::istringstream bad("unknown_key = 3\n");
  CHECK_THROWS_AS(params::parse(bad), ParamError);
  std::istringstream bad2("m 4096\n");
  CHECK_THROWS_AS(params::parse(bad2), ParamError);
}

TEST_CASE("the compat preset pins the experiment message space") {
  REQUIRE(params::has_preset("PN12QP109-compat"));
  const auto p = params::preset("PN12QP109-compat");
  CHECK(p.m_inner == 4096);  // ring degree 4096
  CHECK(p.q == 65537);       // message modulus 65537
  CHECK(p.b_sm == 65536);    // B_sm = 2^16
  CHECK(p.p_inner == 65537);
  CHECK_THROWS_AS(params::preset("nope"), ParamError);
}

TEST_CASE("build_scheme covers the four scheme families") {
  const auto p = tiny_params();
  for (const std::string name : {"atasses", "replicated", "type1", "type2"}) {
    auto scheme = bench::build_scheme(name, 3, 2, 8, p);
    CHECK(scheme->name() == name);
    CHECK(scheme->parties() == 3);
  }
  CHECK_THROWS_AS(bench::build_scheme("nope", 3, 2, 8, p), ParamError);
}

TEST_CASE("bench rows are deterministic in the byte columns") {
  bench::BenchConfig config;
  config.schemes = {"atasses", "type2"};
  config.n_list = {3, 4};
  config.t_fracs = {0.5};
  config.k_mults = {1, 2};
  config.trials = 1;
  config.seed = 9;
  const auto p = tiny_params();

  const auto rows1 = bench::run_bench(config, p);
  const auto rows2 = bench::run_bench(config, p);
  REQUIRE(rows1.size() == rows2.size());
  REQUIRE(rows1.size() == 8);  // 2 schemes x 2 n x 1 t x 2 k x 1 trial
  for (size_t i = 0; i < rows1.size(); ++i) {
    CHECK(rows1[i].comm_bytes == rows2[i].comm_bytes);
    CHECK(rows1[i].status == "ok");
    CHECK(rows1[i].total_seconds >= rows1[i].comm_seconds);
  }
  // comm model: bytes * 8 / (bandwidth * 1e6)
  const double want = static_cast<double>(rows1[0].comm_bytes) * 8.0 /
                      (config.bandwidth_mbps * 1e6);
  CHECK(rows1[0].comm_seconds == doctest::Approx(want));
}

TEST_CASE("capacity refusals name their rule") {
  bench::BenchConfig config;
  config.schemes = {"replicated", "type1", "atasses"};
  config.n_list = {25, 250};
  config.t_fracs = {0.5};
  config.k_mults = {1};
  config.trials = 1;
  config.type1_bit_budget = 64;
  const auto p = tiny_params();
  const auto rows = bench::run_bench(config, p);

  std::map<std::pair<std::string, uint32_t>, std::string> status;
  for (const auto& r : rows) status[{r.scheme, r.n}] = r.status;
  CHECK(status[{"replicated", 25}] == "skipped:replicated-caps-at-n-20");
  CHECK(status[{"type1", 25}] == "skipped:type1-modulus-exceeds-bit-budget");
  CHECK(status[{"atasses", 25}] == "ok");
  CHECK(status[{"atasses", 250}] == "skipped:n-above-200-needs-allow-large-n");
}

TEST_CASE("csv writing and reading round-trip") {
  bench::BenchConfig config;
  config.schemes = {"atasses"};
  config.n_list = {3};
  config.t_fracs = {0.5};
  config.k_mults = {1};
  config.trials = 2;
  const auto rows = bench::run_bench(config, tiny_params());
  std::ostringstream os;
  bench::write_csv(os, rows);
  CHECK(os.str().rfind("scheme,n,t,k,trial,compute_seconds,comm_bytes,"
                       "comm_seconds,total_seconds,status\n",
                       0) == 0);
  std::istringstream is(os.str());
  const auto parsed = bench::read_csv(is);
  REQUIRE(parsed.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].scheme == rows[i].scheme);
    CHECK(parsed[i].comm_bytes == rows[i].comm_bytes);
    CHECK(parsed[i].trial == rows[i].trial);
  }
}

TEST_CASE("synthetic scaling fits recover the planted exponents") {
  std::vector<bench::BenchRow> rows;
  for (uint32_t n : {10u, 20u, 40u, 80u}) {
    for (size_t k : {64u, 128u, 256u}) {
      bench::BenchRow r;
      r.scheme = "synthetic";
      r.n = n;
      r.t = n / 2;
      r.k = k;
      r.trial = 0;
      // t = c * N^2 * K
      r.total_seconds = 1e-6 * n * n * static_cast<double>(k);
      r.compute_seconds = r.total_seconds;
      r.comm_bytes = 1;
      rows.push_back(r);
    }
  }
  const auto summary = bench::emit_summary(rows);
  CHECK(summary.slope_vs_n.at("synthetic") ==
        doctest::Approx(2.0).epsilon(0.05));
  CHECK(summary.slope_vs_k.at("synthetic") ==
        doctest::Approx(1.0).epsilon(0.05));
  CHECK(summary.warnings.empty());

  std::ostringstream os;
  bench::write_summary(os, summary);
  CHECK(os.str().find("slope_vs_n,synthetic") != std::string::npos);
}

TEST_CASE("measured time-vs-K exponent: key-share scheme below the "
          "coordinated-noise scheme") {
  params::ParamSet p = tiny_params();
  p.m_inner = 2048;
  p.b_inner = 16;
  p.b_sm = 65536;

  bench::BenchConfig config;
  config.schemes = {"atasses", "type2"};
  config.n_list = {40};  // key-share work dominates the K-independent part
  config.t_fracs = {0.5};
  config.k_mults = {1, 2, 4};
  config.trials = 5;
  config.seed = 31;
  // warm-up pass: populates transform caches and thread pools so the timed
  // cells see steady state
  {
    bench::BenchConfig warm = config;
    warm.k_mults = {1};
    warm.trials = 1;
    bench::run_bench(warm, p);
  }
  // the type2 rounds reshare length-K noise, so its time tracks K; the
  // key-share work of atasses does not. Wall-clock ordering on a shared
  // machine can hiccup, so take the best of three fits.
  int ordered = 0;
  for (int pass = 0; pass < 3 && ordered < 2; ++pass) {
    config.seed = 31 + pass;
    const auto rows = bench::run_bench(config, p);
    const auto summary = bench::emit_summary(rows);
    REQUIRE(summary.slope_vs_k.count("atasses") == 1);
    REQUIRE(summary.slope_vs_k.count("type2") == 1);
    if (summary.slope_vs_k.at("atasses") < summary.slope_vs_k.at("type2")) {
      ++ordered;
    }
  }
  CHECK(ordered >= 2);
}

TEST_CASE("summary warns when cells are too sparse for a fit") {
  std::vector<bench::BenchRow> rows;
  bench::BenchRow r;
  r.scheme = "sparse";
  r.n = 10;
  r.t = 5;
  r.k = 64;
  r.total_seconds = 1.0;
  rows.push_back(r);
  const auto summary = bench::emit_summary(rows);
  CHECK(summary.slope_vs_n.count("sparse") == 0);
  CHECK_FALSE(summary.warnings.empty());
}

TEST_CASE("loglog_slope on exact power laws") {
  std::vector<std::pair<double, double>> xy;
  for (double x : {1.0, 2.0, 4.0, 8.0}) xy.push_back({x, 3.0 * x * x * x});
  CHECK(bench::loglog_slope(xy) == doctest::Approx(3.0));
}
