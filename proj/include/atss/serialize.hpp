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

#ifndef ATSS_SERIALIZE_HPP_
#define ATSS_SERIALIZE_HPP_

#include <cstdint>
#include <vector>

#include "atss/ring.hpp"

namespace atss {

// Wire format: length-prefixed coefficient arrays. The prefix is a 32-bit
// little-endian count; each residue takes the minimal byte width determined by
// the modulus, little-endian. The modulus itself travels out of band (session
// parameters), as byte sizes feed the complexity assertions bit-exactly.

void put_u32(std::vector<uint8_t>& out, uint32_t v);
void put_u64(std::vector<uint8_t>& out, uint64_t v);
void put_coeffs(std::vector<uint8_t>& out, const RingPoly& v);

size_t coeffs_wire_size(const Modulus& q, size_t count);

class ByteReader {
 public:
  ByteReader(const uint8_t* data, size_t len) : data_(data), len_(len) {}
  explicit ByteReader(const std::vector<uint8_t>& buf)
      : ByteReader(buf.data(), buf.size()) {}

  uint32_t get_u32();
  uint64_t get_u64();
  RingPoly get_coeffs(const Modulus& q);
  bool done() const { return pos_ == len_; }
  size_t remaining() const { return len_ - pos_; }

 private:
  void need(size_t n);
  const uint8_t* data_;
  size_t len_;
  size_t pos_ = 0;
};

}  // namespace atss

#endif  // ATSS_SERIALIZE_HPP_
