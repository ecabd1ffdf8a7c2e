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

#include "atss/shamir.hpp"

#include <algorithm>
#include <set>

#include "atss/errors.hpp"
#include "atss/ring_kernels.hpp"

namespace atss {
namespace shamir {
namespace {

void check_points(const std::vector<uint32_t>& points, const Modulus& q) {
  std::set<uint32_t> seen;
  for (uint32_t x : points) {
    if (x == 0) throw ParamError("evaluation point 0 is the secret");
    if (from_u64(x) >= q.value()) throw ParamError("point exceeds modulus");
    if (!seen.insert(x).second) throw ParamError("duplicate evaluation point");
  }
}

}  // namespace

const BigInt& LagrangeSet::at(uint32_t point) const {
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i] == point) return coeffs[i];
  }
  throw ParamError("point not in participant set");
}

std::vector<Share> share(const RingPoly& secret, uint32_t n, uint32_t t,
                         const std::vector<uint32_t>& points, Rng& rng) {
  if (t < 1 || t > n) throw ParamError("need 1 <= T <= N");
  if (points.size() != n) throw ParamError("need one point per party");
  const Modulus& q = secret.modulus();
  check_points(points, q);

  std::vector<RingPoly> randoms;
  randoms.reserve(t - 1);
  for (uint32_t i = 0; i + 1 < t; ++i) {
    randoms.push_back(sample_uniform(rng, secret.size(), q));
  }
  std::vector<uint64_t> pts(points.begin(), points.end());
  std::vector<RingPoly> payloads = par::multipoint_eval(secret, randoms, pts);

  std::vector<Share> out(n);
  for (uint32_t i = 0; i < n; ++i) {
    out[i].point = points[i];
    out[i].payload = std::move(payloads[i]);
  }
  return out;
}

std::vector<Share> share(const RingPoly& secret, uint32_t n, uint32_t t,
                         Rng& rng) {
  std::vector<uint32_t> points(n);
  for (uint32_t i = 0; i < n; ++i) points[i] = i + 1;
  return share(secret, n, t, points, rng);
}

LagrangeSet lagrange_coeffs(const std::vector<uint32_t>& points,
                            const Modulus& q) {
  check_points(points, q);
  if (points.empty()) throw ParamError("empty participant set");
  LagrangeSet set;
  set.mod = q;
  set.points = points;
  set.coeffs.reserve(points.size());
  for (uint32_t xi : points) {
    BigInt num = 1, den = 1;
    for (uint32_t xj : points) {
      if (xj == xi) continue;
      num = mod_reduce(num * xj, q.value());
      BigInt d = BigInt(xj) - BigInt(xi);
      den = mod_reduce(den * d, q.value());
    }
    set.coeffs.push_back(mod_reduce(num * mod_inverse(den, q.value()),
                                    q.value()));
  }
  return set;
}

RingPoly rec(const std::vector<Share>& shares, uint32_t t) {
  if (shares.size() < t) throw ProtocolError("insufficient shares");
  std::vector<uint32_t> points;
  points.reserve(shares.size());
  for (const auto& s : shares) points.push_back(s.point);
  const Modulus& q = shares[0].payload.modulus();
  LagrangeSet lag = lagrange_coeffs(points, q);

  RingPoly out(q, shares[0].payload.size());
  for (size_t i = 0; i < shares.size(); ++i) {
    if (shares[i].payload.modulus() != q ||
        shares[i].payload.size() != out.size()) {
      throw ParamError("share payload mismatch");
    }
    add_scaled(out, lag.coeffs[i], shares[i].payload);
  }
  return out;
}

Share linear_combine(const std::vector<Share>& shares_at_point,
                     const std::vector<BigInt>& weights) {
  if (shares_at_point.empty()) throw ParamError("nothing to combine");
  if (shares_at_point.size() != weights.size()) {
    throw ParamError("weight count mismatch");
  }
  const uint32_t point = shares_at_point[0].point;
  Share out;
  out.point = point;
  out.payload = RingPoly(shares_at_point[0].payload.modulus(),
                         shares_at_point[0].payload.size());
  for (size_t i = 0; i < shares_at_point.size(); ++i) {
    if (shares_at_point[i].point != point) {
      throw ParamError("shares sit at different points");
    }
    add_scaled(out.payload, weights[i], shares_at_point[i].payload);
  }
  return out;
}

}  // namespace shamir
}  // namespace atss
