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

#include "atss/serialize.hpp"

#include <cstring>

#include "atss/errors.hpp"

namespace atss {
namespace {

void put_le(std::vector<uint8_t>& out, uint64_t v, size_t width) {
  for (size_t i = 0; i < width; ++i) {
    out.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
}

void put_le_big(std::vector<uint8_t>& out, const BigInt& v, size_t width) {
  size_t count = 0;
  const size_t at = out.size();
  out.resize(at + width, 0);
  if (v != 0) {
    mpz_export(out.data() + at, &count, -1, 1, 0, 0, v.get_mpz_t());
  }
  if (count > width) throw ParamError("residue exceeds serialized width");
}

}  // namespace

void put_u32(std::vector<uint8_t>& out, uint32_t v) { put_le(out, v, 4); }
void put_u64(std::vector<uint8_t>& out, uint64_t v) { put_le(out, v, 8); }

void put_coeffs(std::vector<uint8_t>& out, const RingPoly& v) {
  const size_t w = v.modulus().byte_width();
  put_u32(out, static_cast<uint32_t>(v.size()));
  if (v.single_word()) {
    for (size_t i = 0; i < v.size(); ++i) put_le(out, v.words()[i], w);
  } else {
    for (size_t i = 0; i < v.size(); ++i) put_le_big(out, v.bigs()[i], w);
  }
}

size_t coeffs_wire_size(const Modulus& q, size_t count) {
  return 4 + count * q.byte_width();
}

void ByteReader::need(size_t n) {
  if (pos_ + n > len_) throw ProtocolError("truncated message");
}

uint32_t ByteReader::get_u32() {
  need(4);
  uint32_t v = 0;
  for (size_t i = 0; i < 4; ++i) v |= uint32_t{data_[pos_ + i]} << (8 * i);
  pos_ += 4;
  return v;
}

uint64_t ByteReader::get_u64() {
  need(8);
  uint64_t v = 0;
  for (size_t i = 0; i < 8; ++i) v |= uint64_t{data_[pos_ + i]} << (8 * i);
  pos_ += 8;
  return v;
}

RingPoly ByteReader::get_coeffs(const Modulus& q) {
  const uint32_t count = get_u32();
  const size_t w = q.byte_width();
  need(static_cast<size_t>(count) * w);
  RingPoly out(q, count);
  if (q.single_word()) {
    for (uint32_t i = 0; i < count; ++i) {
      uint64_t v = 0;
      for (size_t j = 0; j < w; ++j) {
        v |= uint64_t{data_[pos_ + j]} << (8 * j);
      }
      if (v >= q.u64()) throw ProtocolError("unreduced residue on the wire");
      out.words()[i] = v;
      pos_ += w;
    }
  } else {
    BigInt v;
    for (uint32_t i = 0; i < count; ++i) {
      mpz_import(v.get_mpz_t(), w, -1, 1, 0, 0, data_ + pos_);
      if (v >= q.value()) throw ProtocolError("unreduced residue on the wire");
      out.bigs()[i] = v;
      pos_ += w;
    }
  }
  return out;
}

}  // namespace atss
