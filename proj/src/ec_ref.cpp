// Copyright 2026 the revec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revec/ec_ref.hpp"

#include <bit>

namespace revec {

namespace {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

uint64_t fp_inv(uint64_t x, uint64_t p) {
  x %= p;
  if (x == 0) throw ZeroInverse("fp_inv: 0 has no inverse mod " + std::to_string(p));
  // Extended Euclid on (p, x); track only the coefficient of x.
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(x);
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    int64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

unsigned field_bits(uint64_t p) {
  return static_cast<unsigned>(std::bit_width(p - 1));
}

CurveParams::CurveParams(uint64_t p_, uint64_t a_, uint64_t b_)
    : p(p_), a(a_ % (p_ ? p_ : 1)), b(b_ % (p_ ? p_ : 1)) {
  if (p < 5) throw InvalidCurve("curve modulus must be >= 5");
  if (p > (1u << 20)) throw InvalidCurve("modulus too large for desk-scale runs");
  if (!is_prime(p)) throw InvalidCurve(std::to_string(p) + " is not prime");
  uint64_t disc = (4 * a % p * a % p * a % p + 27 * b % p * b % p) % p;
  if (disc == 0) throw InvalidCurve("singular curve: 4a^3 + 27b^2 = 0 mod p");
}

std::string AffinePoint::str() const {
  if (is_identity) return "O";
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

EncodedPoint encode_point(const AffinePoint& pt) {
  if (pt.is_identity) return {0, 0};
  return {pt.x, pt.y};
}

AffinePoint decode_point(const EncodedPoint& e) {
  if (e.x == 0 && e.y == 0) return AffinePoint::identity();
  return AffinePoint::xy(e.x, e.y);
}

Scalar::Scalar(uint64_t v, unsigned n) : value(v), width(n) {
  if (n >= 64 || v >= (uint64_t{1} << n)) {
    throw Error("scalar " + std::to_string(v) + " does not fit in " +
                std::to_string(n) + " bits");
  }
}

bool on_curve(const AffinePoint& pt, const CurveParams& params) {
  if (pt.is_identity) return true;
  uint64_t p = params.p;
  if (pt.x >= p || pt.y >= p) return false;
  uint64_t lhs = pt.y * pt.y % p;
  uint64_t rhs = (pt.x * pt.x % p * pt.x + params.a * pt.x + params.b) % p;
  return lhs == rhs;
}

AffinePoint ec_neg(const AffinePoint& pt, const CurveParams& params) {
  if (pt.is_identity) return pt;
  return AffinePoint::xy(pt.x, (params.p - pt.y) % params.p);
}

AffinePoint ec_add(const AffinePoint& p1, const AffinePoint& p2,
                   const CurveParams& params) {
  if (!on_curve(p1, params)) throw NotOnCurve("ec_add: " + p1.str() + " not on curve");
  if (!on_curve(p2, params)) throw NotOnCurve("ec_add: " + p2.str() + " not on curve");
  if (p1.is_identity) return p2;
  if (p2.is_identity) return p1;

  const uint64_t p = params.p;
  FieldElement x1{p1.x, p}, y1{p1.y, p}, x2{p2.x, p}, y2{p2.y, p};

  FieldElement lambda{0, p};
  if (x1 == x2) {
    if (!(y1 == y2) || y1.value == 0) return AffinePoint::identity();
    // Tangent: (3x^2 + a) / 2y.
    FieldElement num = params.fe(3) * x1 * x1 + params.fe(params.a);
    lambda = num * (params.fe(2) * y1).inv();
  } else {
    lambda = (y2 - y1) * (x2 - x1).inv();
  }
  FieldElement x3 = lambda * lambda - x1 - x2;
  FieldElement y3 = lambda * (x1 - x3) - y1;
  return AffinePoint::xy(x3.value, y3.value);
}

AffinePoint scalar_mul(uint64_t k, const AffinePoint& q,
                       const CurveParams& params) {
  if (!on_curve(q, params)) throw NotOnCurve("scalar_mul: " + q.str() + " not on curve");
  AffinePoint acc = AffinePoint::identity();
  for (uint64_t i = 0; i < k; ++i) acc = ec_add(acc, q, params);
  return acc;
}

std::vector<AffinePoint> enumerate_group(const CurveParams& params) {
  std::vector<AffinePoint> points{AffinePoint::identity()};
  const uint64_t p = params.p;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t rhs = (x * x % p * x + params.a * x + params.b) % p;
    for (uint64_t y = 0; y < p; ++y) {
      if (y * y % p == rhs) points.push_back(AffinePoint::xy(x, y));
    }
  }
  return points;
}

uint64_t group_order(const CurveParams& params) {
  return enumerate_group(params).size();
}

uint64_t point_order(const AffinePoint& pt, const CurveParams& params) {
  uint64_t n = 1;
  AffinePoint acc = pt;
  while (!acc.is_identity) {
    acc = ec_add(acc, pt, params);
    ++n;
  }
  return n;
}

bool wf_affine_add(const AffinePoint& r, const AffinePoint& g,
                   const CurveParams& params) {
  if (r.is_identity || g.is_identity) return false;
  if (!on_curve(r, params) || !on_curve(g, params)) return false;
  if (r.x == g.x) return false;
  if (r.y == g.y) return false;
  return true;
}

bool wf_chain(const Scalar& k, const AffinePoint& r,
              const std::vector<AffinePoint>& schedule,
              const CurveParams& params) {
  if (schedule.size() < k.width) {
    throw Error("wf_chain: schedule shorter than scalar width");
  }
  AffinePoint acc = r;
  for (unsigned i = 0; i < k.width; ++i) {
    if (!k.bit(i)) continue;
    if (!wf_affine_add(acc, schedule[i], params)) return false;
    acc = ec_add(acc, schedule[i], params);
  }
  return true;
}

}  // namespace revec
