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

// Benchmark driver: sweeps (scheme, N, T, K) cells of the approximate
// recovery protocols and writes CSV rows with computation time, exact
// communication bytes, and emulated communication time.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "atss/bench.hpp"
#include "atss/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"approximate secret sharing benchmark sweep"};

  atss::bench::BenchConfig config;
  std::string out_path = "bench.csv";
  std::string summary_path;
  std::string preset = "PN12QP109-compat";

  app.add_option("--schemes", config.schemes,
                 "schemes to run (atasses, replicated, type1, type2)")
      ->delimiter(',');
  app.add_option("--n-list", config.n_list, "party counts")->delimiter(',');
  app.add_option("--t-frac", config.t_fracs, "thresholds as fractions of N")
      ->delimiter(',');
  app.add_option("--k-mults", config.k_mults,
                 "message lengths as multiples of the inner ring degree")
      ->delimiter(',');
  app.add_option("--trials", config.trials, "trials per cell");
  app.add_option("--seed", config.seed, "base seed");
  app.add_option("--bandwidth-mbps", config.bandwidth_mbps,
                 "bandwidth for the communication-time model");
  app.add_option("--preset", preset, "parameter preset name or file path");
  app.add_option("--out", out_path, "output CSV path");
  app.add_option("--summary", summary_path,
                 "also write per-cell medians and scaling fits here");
  app.add_flag("--allow-large-n", config.allow_large_n,
               "permit party counts above 200");
  app.add_option("--transcript-dir", config.transcript_dir,
                 "export per-cell transcripts into this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    const atss::params::ParamSet params = atss::params::resolve(preset);
    if (!config.transcript_dir.empty()) {
      std::filesystem::create_directories(config.transcript_dir);
    }
    const auto rows = atss::bench::run_bench(config, params);

    std::ofstream out(out_path);
    if (!out) throw atss::ParamError("cannot write " + out_path);
    atss::bench::write_csv(out, rows);

    size_t ok = 0, skipped = 0;
    for (const auto& r : rows) {
      (r.status == "ok" ? ok : skipped)++;
    }
    std::cout << "wrote " << rows.size() << " rows to " << out_path << " ("
              << ok << " ok, " << skipped << " skipped)\n";

    if (!summary_path.empty()) {
      const auto summary = atss::bench::emit_summary(rows);
      std::ofstream sout(summary_path);
      if (!sout) throw atss::ParamError("cannot write " + summary_path);
      atss::bench::write_summary(sout, summary);
      std::cout << "wrote summary to " << summary_path << '\n';
      for (const auto& w : summary.warnings) {
        std::cout << "warning: " << w << '\n';
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
