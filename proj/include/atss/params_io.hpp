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

#ifndef ATSS_PARAMS_IO_HPP_
#define ATSS_PARAMS_IO_HPP_

#include <iosfwd>
#include <string>

#include "atss/bigint.hpp"

namespace atss {
namespace params {

// Text key/value parameter files. Lines are `key = value` with integer
// values; `#` starts a comment. Field q doubles as the approximate-sharing
// message modulus when schemes run standalone. q_inner = 0 means "derive the
// inner ciphertext modulus by search from p_inner, b_inner, and N".
struct ParamSet {
  size_t m = 0;          // outer ring degree M
  BigInt q = 0;          // outer ciphertext modulus Q
  BigInt p = 0;          // outer plaintext modulus P
  BigInt b = 0;          // outer noise bound B
  BigInt b_sm = 0;       // smudging bound B_sm
  uint32_t n = 0;
  uint32_t t = 0;
  size_t m_inner = 0;    // inner cipher ring degree M'
  BigInt q_inner = 0;    // inner ciphertext modulus Q' (0 = derive)
  BigInt p_inner = 0;    // inner plaintext modulus P'
  BigInt b_inner = 0;    // inner noise bound B'
  uint64_t seed = 1;
};

ParamSet parse(std::istream& in);
ParamSet load_file(const std::string& path);
void write(std::ostream& out, const ParamSet& params);

// Named presets. "PN12QP109-compat" pins the experiment setting: message
// space of ring degree 4096 with modulus 65537 and B_sm = 2^16.
ParamSet preset(const std::string& name);
bool has_preset(const std::string& name);

// Load `name_or_path` as a preset name first, else as a file path.
ParamSet resolve(const std::string& name_or_path);

}  // namespace params
}  // namespace atss

#endif  // ATSS_PARAMS_IO_HPP_
