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

#include "atss/params_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "atss/errors.hpp"

namespace atss {
namespace params {
namespace {

std::string trim(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r");
  return s.substr(from, to - from + 1);
}

BigInt parse_int(const std::string& v, const std::string& key) {
  try {
    return BigInt(v);
  } catch (const std::invalid_argument&) {
    throw ParamError("bad integer for key '" + key + "': " + v);
  }
}

}  // namespace

ParamSet parse(std::istream& in) {
  ParamSet out;
  std::map<std::string, bool> seen;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParamError("expected key = value: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    const BigInt v = parse_int(val, key);
    seen[key] = true;
    if (key == "m") {
      out.m = static_cast<size_t>(to_u64(v));
    } else if (key == "q") {
      out.q = v;
    } else if (key == "p") {
      out.p = v;
    } else if (key == "b") {
      out.b = v;
    } else if (key == "b_sm") {
      out.b_sm = v;
    } else if (key == "n") {
      out.n = static_cast<uint32_t>(to_u64(v));
    } else if (key == "t") {
      out.t = static_cast<uint32_t>(to_u64(v));
    } else if (key == "m_inner") {
      out.m_inner = static_cast<size_t>(to_u64(v));
    } else if (key == "q_inner") {
      out.q_inner = v;
    } else if (key == "p_inner") {
      out.p_inner = v;
    } else if (key == "b_inner") {
      out.b_inner = v;
    } else if (key == "seed") {
      out.seed = to_u64(v);
    } else {
      throw ParamError("unknown parameter key: " + key);
    }
  }
  return out;
}

ParamSet load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open parameter file: " + path);
  return parse(in);
}

void write(std::ostream& out, const ParamSet& p) {
  out << "m = " << p.m << '\n'
      << "q = " << to_string(p.q) << '\n'
      << "p = " << to_string(p.p) << '\n'
      << "b = " << to_string(p.b) << '\n'
      << "b_sm = " << to_string(p.b_sm) << '\n'
      << "n = " << p.n << '\n'
      << "t = " << p.t << '\n'
      << "m_inner = " << p.m_inner << '\n'
      << "q_inner = " << to_string(p.q_inner) << '\n'
      << "p_inner = " << to_string(p.p_inner) << '\n'
      << "b_inner = " << to_string(p.b_inner) << '\n'
      << "seed = " << p.seed << '\n';
}

bool has_preset(const std::string& name) {
  return name == "PN12QP109-compat" || name == "toy" || name == "pipeline";
}

ParamSet preset(const std::string& name) {
  ParamSet out;
  if (name == "PN12QP109-compat") {
    // ring degree 4096, message modulus 65537, B_sm = 2^16; inner ciphertext
    // modulus derived per party count
    out.m = 4096;
    out.q = 65537;
    out.p = 2;
    out.b = 1;
    out.b_sm = 65536;
    out.n = 10;
    out.t = 7;
    out.m_inner = 4096;
    out.q_inner = 0;
    out.p_inner = 65537;
    out.b_inner = 16;
    out.seed = 1;
    return out;
  }
  if (name == "toy") {
    out.m = 8;
    out.q = 65537;
    out.p = 17;
    out.b = 1;
    out.b_sm = 8;
    out.n = 3;
    out.t = 2;
    out.m_inner = 8;
    out.q_inner = 0;
    out.p_inner = 65537;
    out.b_inner = 2;
    out.seed = 1;
    return out;
  }
  if (name == "pipeline") {
    // outer ring sized for end-to-end decryption tests up to N = 20 and
    // eight additions; Q is the smallest NTT-friendly prime above the budget
    out.m = 256;
    out.q = 100005377;
    out.p = 257;
    out.b = 2;
    out.b_sm = 1024;
    out.n = 5;
    out.t = 3;
    out.m_inner = 1024;
    out.q_inner = 0;
    out.p_inner = 100005377;
    out.b_inner = 4;
    out.seed = 1;
    return out;
  }
  throw ParamError("unknown preset: " + name);
}

ParamSet resolve(const std::string& name_or_path) {
  if (has_preset(name_or_path)) return preset(name_or_path);
  return load_file(name_or_path);
}

}  // namespace params
}  // namespace atss
