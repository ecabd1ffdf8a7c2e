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

#include "atss/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "atss/atasses.hpp"
#include "atss/baselines.hpp"
#include "atss/errors.hpp"
#include "atss/harness.hpp"

namespace atss {
namespace bench {
namespace {

uint32_t threshold_of(uint32_t n, double frac) {
  auto t = static_cast<uint32_t>(std::llround(frac * n));
  return std::clamp<uint32_t>(t, 1, n);
}

// Projected wire volume per scheme; cells above the budget are refused
// instead of exhausting memory.
uint64_t projected_wire_bytes(const std::string& scheme, uint32_t n, uint32_t t,
                              size_t k, const params::ParamSet& params) {
  const Modulus msg_mod{params.q};
  const uint64_t wp = msg_mod.byte_width();
  const uint64_t nn = n;
  if (scheme == "atasses") {
    const Modulus p_inner{params.p_inner};
    const BigInt q_inner = params.q_inner != 0
                               ? params.q_inner
                               : rlwe::find_cipher_modulus(
                                     p_inner, params.b_inner, n, params.m_inner);
    const uint64_t wq = Modulus(q_inner).byte_width();
    const uint64_t mi = params.m_inner;
    const uint64_t chunks = (k + mi - 1) / mi;
    const uint64_t poly = 4 + mi * wq;
    return nn * (nn - 1) * 2 * poly          // key shares
           + nn * (4 + chunks * 4 * poly)    // ciphertext uploads
           + nn * (4 + t * (8 + 1 + wp))     // weight broadcast (upper bound)
           + nn * (4 + poly);                // dk shares
  }
  if (scheme == "type2") {
    return nn * (nn - 1) * (8 + k * wp) + nn * (8 + k * wp);
  }
  if (scheme == "type1") {
    const BigInt p1 =
        baselines::type1_modulus(n, params.b_sm, 2 * params.q);
    const uint64_t w1 = Modulus(p1).byte_width();
    return nn * (8 + k * w1);
  }
  if (scheme == "replicated") {
    const BigInt pieces = binomial(n, t - 1) - binomial(n - 1, t - 1);
    const BigInt held = binomial(n - 1, t - 1);
    (void)pieces;
    const BigInt bytes = BigInt(nn) * (4 + held * (8 + k * wp));
    if (!fits_u64(bytes)) return UINT64_MAX;
    return to_u64(bytes);
  }
  throw ParamError("unknown scheme: " + scheme);
}

std::string capacity_refusal(const std::string& scheme, uint32_t n, uint32_t t,
                             size_t k, const BenchConfig& config,
                             const params::ParamSet& params) {
  if (!config.allow_large_n && n > 200) {
    return "skipped:n-above-200-needs-allow-large-n";
  }
  if (scheme == "replicated" && n > 20) {
    return "skipped:replicated-caps-at-n-20";
  }
  if (scheme == "type1") {
    const BigInt p1 = baselines::type1_modulus(n, params.b_sm, 2 * params.q);
    if (bit_length(p1) > config.type1_bit_budget) {
      return "skipped:type1-modulus-exceeds-bit-budget";
    }
  }
  if (projected_wire_bytes(scheme, n, t, k, params) > config.wire_budget) {
    return "skipped:wire-volume-exceeds-budget";
  }
  return "";
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

bool CellKey::operator<(const CellKey& o) const {
  if (scheme != o.scheme) return scheme < o.scheme;
  if (n != o.n) return n < o.n;
  if (t != o.t) return t < o.t;
  return k < o.k;
}

std::unique_ptr<ApproxScheme> build_scheme(const std::string& name, uint32_t n,
                                           uint32_t t, size_t msg_len,
                                           const params::ParamSet& params) {
  const Modulus msg_mod{params.q};
  if (name == "atasses") {
    atasses::Config cfg;
    cfg.n = n;
    cfg.t = t;
    cfg.msg_mod = msg_mod;
    cfg.msg_len = msg_len;
    cfg.smudge_bound = params.b_sm;
    cfg.crs_seed = params.seed;
    const BigInt q_inner =
        params.q_inner != 0
            ? params.q_inner
            : rlwe::find_cipher_modulus(msg_mod, params.b_inner, n,
                                        params.m_inner);
    cfg.cipher = rlwe::CipherParams::validated(params.m_inner, Modulus(q_inner),
                                               msg_mod, params.b_inner, n);
    return atasses::make_scheme(std::move(cfg));
  }
  if (name == "replicated") {
    baselines::ReplicatedConfig cfg;
    cfg.n = n;
    cfg.t = t;
    cfg.msg_mod = msg_mod;
    cfg.msg_len = msg_len;
    cfg.smudge_bound = params.b_sm;
    return baselines::make_replicated(std::move(cfg));
  }
  if (name == "type1") {
    baselines::Type1Config cfg;
    cfg.n = n;
    cfg.t = t;
    cfg.msg_mod = Modulus(baselines::type1_modulus(n, params.b_sm, 2 * params.q));
    cfg.msg_len = msg_len;
    cfg.smudge_bound = params.b_sm;
    return baselines::make_type1(std::move(cfg));
  }
  if (name == "type2") {
    baselines::Type2Config cfg;
    cfg.n = n;
    cfg.t = t;
    cfg.msg_mod = msg_mod;
    cfg.msg_len = msg_len;
    cfg.smudge_bound = params.b_sm;
    return baselines::make_type2(std::move(cfg));
  }
  throw ParamError("unknown scheme: " + name);
}

std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const params::ParamSet& params) {
  std::vector<BenchRow> rows;
  const Modulus common_mod{params.q};
  for (const auto& scheme_name : config.schemes) {
    for (uint32_t n : config.n_list) {
      for (double frac : config.t_fracs) {
        const uint32_t t = threshold_of(n, frac);
        for (uint32_t mult : config.k_mults) {
          const size_t k = static_cast<size_t>(mult) * params.m_inner;
          const std::string refusal =
              capacity_refusal(scheme_name, n, t, k, config, params);
          for (uint32_t trial = 0; trial < config.trials; ++trial) {
            BenchRow row;
            row.scheme = scheme_name;
            row.n = n;
            row.t = t;
            row.k = k;
            row.trial = trial;
            if (!refusal.empty()) {
              row.status = refusal;
              rows.push_back(std::move(row));
              continue;
            }
            auto scheme = build_scheme(scheme_name, n, t, k, params);
            Rng rng = Rng(config.seed).fork(n, mult, trial);
            // a common message in the shared space, lifted if needed
            RingPoly msg = sample_uniform(rng, k, common_mod);
            if (scheme->message_space().mod != common_mod) {
              msg = convert_mod(msg, scheme->message_space().mod);
            }
            auto shares = scheme->share(msg, rng);
            const uint64_t session_seed = rng.next();
            sim::RunResult run =
                sim::run_session(*scheme, std::move(shares),
                                 sim::DropoutSchedule::none(), session_seed);
            if (run.aborted) {
              row.status = "aborted:" + run.abort_reason;
              rows.push_back(std::move(row));
              continue;
            }
            const ComplexityReport report = measure(run.transcript);
            row.compute_seconds =
                run.aggregator_seconds + run.max_party_seconds;
            row.comm_bytes = report.serial_link_bytes;
            row.comm_seconds = static_cast<double>(row.comm_bytes) * 8.0 /
                               (config.bandwidth_mbps * 1e6);
            row.total_seconds = row.compute_seconds + row.comm_seconds;
            if (!config.transcript_dir.empty()) {
              std::ostringstream name;
              name << config.transcript_dir << '/' << scheme_name << "_n" << n
                   << "_t" << t << "_k" << k << "_trial" << trial;
              std::ofstream lines(name.str() + ".transcript");
              run.transcript.write_lines(lines);
              std::ofstream summary(name.str() + ".summary.csv");
              report.write_csv(summary);
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BenchRow& a, const BenchRow& b) {
                     return std::tie(a.scheme, a.n, a.t, a.k, a.trial) <
                            std::tie(b.scheme, b.n, b.t, b.k, b.trial);
                   });
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "scheme,n,t,k,trial,compute_seconds,comm_bytes,comm_seconds,"
        "total_seconds,status\n";
  for (const auto& r : rows) {
    os << r.scheme << ',' << r.n << ',' << r.t << ',' << r.k << ',' << r.trial
       << ',' << r.compute_seconds << ',' << r.comm_bytes << ','
       << r.comm_seconds << ',' << r.total_seconds << ',' << r.status << '\n';
  }
}

std::vector<BenchRow> read_csv(std::istream& is) {
  std::vector<BenchRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::istringstream ls(line);
    BenchRow r;
    std::string field;
    std::getline(ls, r.scheme, ',');
    std::getline(ls, field, ',');
    r.n = static_cast<uint32_t>(std::stoul(field));
    std::getline(ls, field, ',');
    r.t = static_cast<uint32_t>(std::stoul(field));
    std::getline(ls, field, ',');
    r.k = std::stoull(field);
    std::getline(ls, field, ',');
    r.trial = static_cast<uint32_t>(std::stoul(field));
    std::getline(ls, field, ',');
    r.compute_seconds = std::stod(field);
    std::getline(ls, field, ',');
    r.comm_bytes = std::stoull(field);
    std::getline(ls, field, ',');
    r.comm_seconds = std::stod(field);
    std::getline(ls, field, ',');
    r.total_seconds = std::stod(field);
    std::getline(ls, r.status, ',');
    rows.push_back(std::move(r));
  }
  return rows;
}

double loglog_slope(const std::vector<std::pair<double, double>>& xy) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(xy.size());
  for (const auto& [x, y] : xy) {
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
}

Summary emit_summary(const std::vector<BenchRow>& rows) {
  Summary out;
  std::map<CellKey, std::vector<double>> totals, computes;
  std::map<CellKey, uint64_t> bytes;
  for (const auto& r : rows) {
    if (r.status != "ok") continue;
    const CellKey key{r.scheme, r.n, r.t, r.k};
    totals[key].push_back(r.total_seconds);
    computes[key].push_back(r.compute_seconds);
    bytes[key] = r.comm_bytes;
  }
  for (const auto& [key, v] : totals) {
    out.median_total[key] = median(v);
    out.median_compute[key] = median(computes[key]);
    out.comm_bytes[key] = bytes[key];
  }

  // slope of time vs N per scheme, averaged over (t-fraction, k) groups
  std::map<std::string, std::vector<double>> n_slopes, k_slopes;
  std::map<std::string, std::map<std::pair<double, size_t>,
                                 std::vector<std::pair<double, double>>>>
      by_tk;
  std::map<std::string,
           std::map<std::pair<uint32_t, uint32_t>,
                    std::vector<std::pair<double, double>>>>
      by_nt;
  for (const auto& [key, total] : out.median_total) {
    const double frac =
        static_cast<double>(key.t) / static_cast<double>(key.n);
    by_tk[key.scheme][{std::round(frac * 10) / 10, key.k}].push_back(
        {static_cast<double>(key.n), total});
    by_nt[key.scheme][{key.n, key.t}].push_back(
        {static_cast<double>(key.k), total});
  }
  for (auto& [scheme, groups] : by_tk) {
    for (auto& [group, pts] : groups) {
      (void)group;
      std::sort(pts.begin(), pts.end());
      if (pts.size() >= 3) n_slopes[scheme].push_back(loglog_slope(pts));
    }
    if (n_slopes[scheme].empty()) {
      out.warnings.push_back("scheme " + scheme +
                             ": fewer than 3 N values; no N-slope");
    } else {
      double s = 0;
      for (double v : n_slopes[scheme]) s += v;
      out.slope_vs_n[scheme] = s / static_cast<double>(n_slopes[scheme].size());
    }
  }
  for (auto& [scheme, groups] : by_nt) {
    for (auto& [group, pts] : groups) {
      (void)group;
      std::sort(pts.begin(), pts.end());
      if (pts.size() >= 3) k_slopes[scheme].push_back(loglog_slope(pts));
    }
    if (k_slopes[scheme].empty()) {
      out.warnings.push_back("scheme " + scheme +
                             ": fewer than 3 K values; no K-slope");
    } else {
      double s = 0;
      for (double v : k_slopes[scheme]) s += v;
      out.slope_vs_k[scheme] = s / static_cast<double>(k_slopes[scheme].size());
    }
  }
  return out;
}

void write_summary(std::ostream& os, const Summary& summary) {
  os << "record,scheme,n,t,k,value\n";
  for (const auto& [key, v] : summary.median_total) {
    os << "median_total," << key.scheme << ',' << key.n << ',' << key.t << ','
       << key.k << ',' << v << '\n';
  }
  for (const auto& [key, v] : summary.median_compute) {
    os << "median_compute," << key.scheme << ',' << key.n << ',' << key.t
       << ',' << key.k << ',' << v << '\n';
  }
  for (const auto& [key, v] : summary.comm_bytes) {
    os << "comm_bytes," << key.scheme << ',' << key.n << ',' << key.t << ','
       << key.k << ',' << v << '\n';
  }
  for (const auto& [scheme, v] : summary.slope_vs_n) {
    os << "slope_vs_n," << scheme << ",,,," << v << '\n';
  }
  for (const auto& [scheme, v] : summary.slope_vs_k) {
    os << "slope_vs_k," << scheme << ",,,," << v << '\n';
  }
  for (const auto& w : summary.warnings) {
    os << "warning," << w << ",,,,\n";
  }
}

}  // namespace bench
}  // namespace atss
