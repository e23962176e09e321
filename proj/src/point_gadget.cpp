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

#include "revec/point_gadget.hpp"

namespace revec {

namespace {

void copy_wires(Circuit& c, const Wires& src, const Wires& dest, OriginTag tag) {
  for (size_t i = 0; i < src.size(); ++i) {
    c.append(Gate::cx(src[i], dest[i], tag));
  }
}

/// Accumulates the chord addition (ix, iy) + Q into (ox, oy) by XOR:
/// lambda = (iy - qy) / (ix - qx), x3 = lambda^2 - ix - qx,
/// y3 = lambda (ix - x3) - iy; all working registers are uncomputed.
/// In contract when ix != qx (the Kaliski operand is nonzero).
void chord_accumulate(Circuit& c, const ModRegister& ix, const ModRegister& iy,
                      const ModRegister& ox, const ModRegister& oy,
                      const AffinePoint& q, const CurveParams& params) {
  const uint64_t p = params.p;
  const unsigned m = params.bits();

  QubitRange dxq = c.alloc_ancilla(m), dyq = c.alloc_ancilla(m);
  QubitRange tq = c.alloc_ancilla(m), lq = c.alloc_ancilla(m);
  QubitRange l2q = c.alloc_ancilla(m), sqq = c.alloc_ancilla(m);
  QubitRange x3q = c.alloc_ancilla(m), d2q = c.alloc_ancilla(m);
  QubitRange y3q = c.alloc_ancilla(m);
  ModRegister dx(dxq, p), dy(dyq, p), t(tq, p), l(lq, p), l2(l2q, p);
  ModRegister sq(sqq, p), x3(x3q, p), d2(d2q, p), y3(y3q, p);

  const size_t mark = c.size();

  copy_wires(c, ix.bits, dx.bits, OriginTag::Arith);
  sub_const_mod(c, dx, q.x);                 // dx = ix - qx
  copy_wires(c, iy.bits, dy.bits, OriginTag::Arith);
  sub_const_mod(c, dy, q.y);                 // dy = iy - qy
  kaliski_inv(c, dx, t);                     // t = dx^-1
  mul_reg_mod(c, dy, t, l);                  // l = lambda
  copy_wires(c, l.bits, l2.bits, OriginTag::Arith);
  mul_reg_mod(c, l, l2, sq);                 // sq = lambda^2
  copy_wires(c, sq.bits, x3.bits, OriginTag::Arith);
  sub_reg_mod(c, ix, x3);
  sub_const_mod(c, x3, q.x);                 // x3 = lambda^2 - ix - qx
  copy_wires(c, ix.bits, d2.bits, OriginTag::Arith);
  sub_reg_mod(c, x3, d2);                    // d2 = ix - x3
  mul_reg_mod(c, l, d2, y3);
  sub_reg_mod(c, iy, y3);                    // y3 = lambda (ix - x3) - iy

  const size_t copy_mark = c.size();
  copy_wires(c, x3.bits, ox.bits, OriginTag::Arith);
  copy_wires(c, y3.bits, oy.bits, OriginTag::Arith);

  c.append_uncompute_range(mark, copy_mark);

  c.free_ancilla(dxq);
  c.free_ancilla(dyq);
  c.free_ancilla(tq);
  c.free_ancilla(lq);
  c.free_ancilla(l2q);
  c.free_ancilla(sqq);
  c.free_ancilla(x3q);
  c.free_ancilla(d2q);
  c.free_ancilla(y3q);
}

/// Classical value the chord circuit XORs out for a given input encoding;
/// used at build time to patch its one singular point.
EncodedPoint chord_eval(const AffinePoint& q, const CurveParams& params,
                        const EncodedPoint& input) {
  const unsigned m = params.bits();
  Circuit probe = Circuit::with_registers(
      {{"ix", m}, {"iy", m}, {"ox", m}, {"oy", m}});
  ModRegister ix(probe.reg("ix"), params.p), iy(probe.reg("iy"), params.p);
  ModRegister ox(probe.reg("ox"), params.p), oy(probe.reg("oy"), params.p);
  chord_accumulate(probe, ix, iy, ox, oy, q, params);

  BasisState s(probe.qubit_count());
  s.write(ix.bits, input.x);
  s.write(iy.bits, input.y);
  BasisState out = simulate(probe, s);
  return {out.read(ox.bits), out.read(oy.bits)};
}

/// Flips `flag` iff the register pair equals the encoded pattern.
void match_pattern(Circuit& c, const ModRegister& x, const ModRegister& y,
                   const EncodedPoint& pattern, uint32_t flag) {
  Wires all = concat(x.bits, y.bits);
  uint64_t value = pattern.x | (pattern.y << x.width());
  for (size_t i = 0; i < all.size(); ++i) {
    if (!((value >> i) & 1)) c.append(Gate::x(all[i]));
  }
  c.append(Gate::mcx(all, flag));
  for (size_t i = 0; i < all.size(); ++i) {
    if (!((value >> i) & 1)) c.append(Gate::x(all[i]));
  }
}

}  // namespace

DoublingSchedule doubles_schedule(const AffinePoint& g, unsigned n,
                                  const CurveParams& params) {
  if (n < 1) throw Error("doubles_schedule: width must be >= 1");
  if (!on_curve(g, params)) throw NotOnCurve("doubles_schedule: base not on curve");
  DoublingSchedule sched;
  sched.base = g;
  sched.width = n;
  AffinePoint q = g;
  for (unsigned i = 0; i < n; ++i) {
    if (q.is_identity) {
      throw ScheduleHitsIdentity("doubles_schedule: 2^" + std::to_string(i) +
                                 " G is the identity");
    }
    sched.entries.push_back(q);
    q = ec_add(q, q, params);
  }
  return sched;
}

void add_inpl_const(Circuit& c, const PointRegisters& acc,
                    const AffinePoint& g, const CurveParams& params) {
  if (g.is_identity) {
    throw AddIdentityUnsupported("add_inpl_const: constant point must not be O");
  }
  if (!on_curve(g, params)) throw NotOnCurve("add_inpl_const: G not on curve");
  const unsigned m = params.bits();
  const uint64_t p = params.p;

  QubitRange txq = c.alloc_ancilla(m);
  QubitRange tyq = c.alloc_ancilla(m);
  ModRegister tx(txq, p), ty(tyq, p);

  // (tx, ty) ^= R + G, then acc ^= (R + G) - G, clearing it to zero.
  chord_accumulate(c, acc.x, acc.y, tx, ty, g, params);
  const AffinePoint neg_g = ec_neg(g, params);
  chord_accumulate(c, tx, ty, acc.x, acc.y, neg_g, params);

  // The subtraction chord is singular exactly at result = -G (input
  // R = -2G, which wf_affine_add admits); reroute that one point.
  const AffinePoint two_g = ec_add(g, g, params);
  if (!two_g.is_identity) {
    const EncodedPoint at = encode_point(neg_g);
    const EncodedPoint junk = chord_eval(neg_g, params, at);
    const EncodedPoint want = encode_point(ec_neg(two_g, params));
    const uint64_t fix_x = junk.x ^ want.x;
    const uint64_t fix_y = junk.y ^ want.y;
    if (fix_x != 0 || fix_y != 0) {
      QubitRange flag = c.alloc_ancilla(1);
      match_pattern(c, tx, ty, at, flag.offset);
      for (unsigned i = 0; i < m; ++i) {
        if ((fix_x >> i) & 1) c.append(Gate::cx(flag.offset, acc.x.bits[i]));
        if ((fix_y >> i) & 1) c.append(Gate::cx(flag.offset, acc.y.bits[i]));
      }
      match_pattern(c, tx, ty, at, flag.offset);
      c.free_ancilla(flag);
    }
  }

  for (unsigned i = 0; i < m; ++i) {
    c.append(Gate::swap(acc.x.bits[i], tx.bits[i]));
    c.append(Gate::swap(acc.y.bits[i], ty.bits[i]));
  }
  c.free_ancilla(txq);
  c.free_ancilla(tyq);
}

Circuit build_add_inpl(const CurveParams& params, const AffinePoint& g) {
  const unsigned m = params.bits();
  Circuit c = Circuit::with_registers({{"acc_x", m}, {"acc_y", m}});
  PointRegisters acc{ModRegister(c.reg("acc_x"), params.p),
                     ModRegister(c.reg("acc_y"), params.p)};
  add_inpl_const(c, acc, g, params);
  return c;
}

PointRegisters acc_registers(const Circuit& c, const CurveParams& params) {
  return {ModRegister(c.reg("acc_x"), params.p),
          ModRegister(c.reg("acc_y"), params.p)};
}

void write_point(BasisState& s, const PointRegisters& acc, const AffinePoint& pt) {
  EncodedPoint e = encode_point(pt);
  s.write(acc.x.bits, e.x);
  s.write(acc.y.bits, e.y);
}

EncodedPoint read_point(const BasisState& s, const PointRegisters& acc) {
  return {s.read(acc.x.bits), s.read(acc.y.bits)};
}

}  // namespace revec
