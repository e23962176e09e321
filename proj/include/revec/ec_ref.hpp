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

/*
 * Classical reference arithmetic for short-Weierstrass curves over small
 * prime fields. Everything here is plain integer math; reversible circuits
 * elsewhere in the library are judged against these functions.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revec/errors.hpp"

namespace revec {

/// Multiplicative inverse of x modulo prime p, by extended Euclid.
/// Throws ZeroInverse when x == 0 (mod p).
uint64_t fp_inv(uint64_t x, uint64_t p);

/// Width in bits of the modular registers for modulus p: ceil(log2 p).
unsigned field_bits(uint64_t p);

struct CurveParams;

/// An element of F_p, kept reduced to [0, p).
struct FieldElement {
  uint64_t value = 0;
  uint64_t modulus = 0;

  FieldElement() = default;
  FieldElement(uint64_t v, uint64_t p) : value(v % p), modulus(p) {}

  FieldElement operator+(const FieldElement& o) const {
    return {(value + o.value) % modulus, modulus};
  }
  FieldElement operator-(const FieldElement& o) const {
    return {(value + modulus - o.value) % modulus, modulus};
  }
  FieldElement operator*(const FieldElement& o) const {
    return {(value * o.value) % modulus, modulus};
  }
  FieldElement inv() const { return {fp_inv(value, modulus), modulus}; }
  FieldElement neg() const { return {(modulus - value) % modulus, modulus}; }

  bool operator==(const FieldElement& o) const = default;
};

/// Prime field and short-Weierstrass coefficients y^2 = x^3 + ax + b.
/// Construction validates primality of p (trial division; desk-scale
/// moduli only), p >= 5, and nonsingularity 4a^3 + 27b^2 != 0 (mod p).
struct CurveParams {
  uint64_t p = 0;
  uint64_t a = 0;
  uint64_t b = 0;

  CurveParams(uint64_t p_, uint64_t a_, uint64_t b_);

  unsigned bits() const { return field_bits(p); }
  FieldElement fe(uint64_t v) const { return {v, p}; }
};

/// A point of E(F_p): the identity, or affine coordinates on the curve.
struct AffinePoint {
  bool is_identity = true;
  uint64_t x = 0;
  uint64_t y = 0;

  static AffinePoint identity() { return {}; }
  static AffinePoint xy(uint64_t x, uint64_t y) { return {false, x, y}; }

  bool operator==(const AffinePoint& o) const {
    if (is_identity || o.is_identity) return is_identity == o.is_identity;
    return x == o.x && y == o.y;
  }
  bool operator<(const AffinePoint& o) const {
    if (is_identity != o.is_identity) return is_identity;
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
  std::string str() const;
};

/// Register-level encoding of a point: two coordinates with (0,0) denoting
/// the identity. Whether (0,0) can appear mid-computation is off-contract.
struct EncodedPoint {
  uint64_t x = 0;
  uint64_t y = 0;
  bool operator==(const EncodedPoint& o) const = default;
};

EncodedPoint encode_point(const AffinePoint& pt);
AffinePoint decode_point(const EncodedPoint& e);

/// A scalar as held in an n-bit register.
struct Scalar {
  uint64_t value = 0;
  unsigned width = 0;

  Scalar(uint64_t v, unsigned n);
  bool bit(unsigned i) const { return (value >> i) & 1; }
};

bool on_curve(const AffinePoint& pt, const CurveParams& params);

/// Group negation. neg(O) = O; neg((x,y)) = (x, p-y).
AffinePoint ec_neg(const AffinePoint& pt, const CurveParams& params);

/// Full group law, covering identity operands, inverse points, doubling and
/// the generic chord case. Throws NotOnCurve for operands off the curve.
AffinePoint ec_add(const AffinePoint& p1, const AffinePoint& p2,
                   const CurveParams& params);

/// k-fold group sum by repeated ec_add.
AffinePoint scalar_mul(uint64_t k, const AffinePoint& q,
                       const CurveParams& params);

/// All points of E(F_p) including the identity, sorted, by exhausting x and
/// solving for y.
std::vector<AffinePoint> enumerate_group(const CurveParams& params);

/// Order of the whole group E(F_p).
uint64_t group_order(const CurveParams& params);

/// Order of a single point.
uint64_t point_order(const AffinePoint& pt, const CurveParams& params);

/// The lightweight well-formedness screen for the generic affine addition
/// gadget: both operands non-identity and on curve, R_x - G_x != 0 and
/// R_y - G_y != 0 (mod p).
bool wf_affine_add(const AffinePoint& r, const AffinePoint& g,
                   const CurveParams& params);

/// Replays the multiply-and-add loop classically and reports whether every
/// conditionally applied addition at a set bit of k satisfies wf_affine_add
/// against the accumulator at that step.
bool wf_chain(const Scalar& k, const AffinePoint& r,
              const std::vector<AffinePoint>& schedule,
              const CurveParams& params);

}  // namespace revec
