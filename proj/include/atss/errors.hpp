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

#ifndef ATSS_ERRORS_HPP_
#define ATSS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace atss {

// Invalid parameters or mismatched operands (modulus/degree/point mismatch,
// rejected configurations).
class ParamError : public std::invalid_argument {
 public:
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// Violated protocol-state preconditions (missing shares, bad message, wrong
// round). Threshold shortfalls during a simulated session are reported as an
// aborted run, not an exception.
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace atss

#endif  // ATSS_ERRORS_HPP_
