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

#include "revec/rev_arith.hpp"

#include <algorithm>

namespace revec {

namespace {

void assert_disjoint(const Wires& a, const Wires& b, const char* who) {
  for (uint32_t qa : a) {
    for (uint32_t qb : b) {
      if (qa == qb) throw AliasedRegisters(std::string(who) + ": registers share a wire");
    }
  }
}

void assert_same_field(const ModRegister& a, const ModRegister& b, const char* who) {
  if (a.modulus != b.modulus) {
    throw RegisterMismatch(std::string(who) + ": mixed moduli");
  }
  if (a.width() != b.width()) {
    throw WidthMismatch(std::string(who) + ": mixed register widths");
  }
}

/// Loads the set bits of k into w conditioned on `flag`.
void ctrl_load_const(Circuit& c, uint32_t flag, const Wires& w, uint64_t k,
                     OriginTag tag) {
  for (size_t i = 0; i < w.size(); ++i) {
    if ((k >> i) & 1) c.append(Gate::cx(flag, w[i], tag));
  }
}

/// value += k under `flag` (plain, mod 2^w).
void ctrl_add_const(Circuit& c, uint32_t flag, const Wires& w, uint64_t k) {
  QubitRange kreg = c.alloc_ancilla(static_cast<uint32_t>(w.size()));
  Wires kw = wires_of(kreg);
  ctrl_load_const(c, flag, kw, k, OriginTag::ConstLoad);
  ripple_add(c, kw, w);
  ctrl_load_const(c, flag, kw, k, OriginTag::Uncompute);
  c.free_ancilla(kreg);
}

/// Left rotation by one: value doubles when the top wire is 0.
void rot_left(Circuit& c, const Wires& w) {
  for (size_t i = w.size() - 1; i >= 1; --i) {
    c.append(Gate::swap(w[i], w[i - 1]));
  }
}

/// Right rotation by one: value halves when the bottom wire is 0.
void rot_right(Circuit& c, const Wires& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    c.append(Gate::swap(w[i], w[i + 1]));
  }
}

void cswap(Circuit& c, uint32_t flag, uint32_t a, uint32_t b) {
  c.append(Gate::cx(b, a));
  c.append(Gate::ccx(flag, a, b));
  c.append(Gate::cx(b, a));
}

/// dest ^= src under `flag` (bitwise fan of CCX).
void ctrl_copy(Circuit& c, uint32_t flag, const Wires& src, const Wires& dest,
               OriginTag tag) {
  for (size_t i = 0; i < src.size(); ++i) {
    c.append(Gate::ccx(flag, src[i], dest[i], tag));
  }
}

void copy_wires(Circuit& c, const Wires& src, const Wires& dest, OriginTag tag) {
  for (size_t i = 0; i < src.size(); ++i) {
    c.append(Gate::cx(src[i], dest[i], tag));
  }
}

/// One round of the binary almost-inverse. The live branches are
///   u even:            u /= 2, s *= 2
///   v even, u odd:     v /= 2, r *= 2
///   both odd, u > v:   u = (u-v)/2, r += s, s *= 2
///   both odd, v >= u:  v = (v-u)/2, s += r, r *= 2
/// realised as a conditional (u,r)<->(v,s) mirror around a canonical step.
/// Once v = 0 the round degenerates to r *= 2, which preserves the
/// invariant x*r = -2^k (mod p) through the fixed 2m-round schedule.
/// The two selector bits stay set and are cleaned by the caller's
/// uncompute pass.
void kaliski_round(Circuit& c, const Wires& u, const Wires& v, const Wires& r,
                   const Wires& s, uint32_t g_swap, uint32_t g_odd) {
  // g_swap = u0 AND NOT(v0 AND [v < u]): the mirrored branches.
  QubitRange cmp = c.alloc_ancilla(1);
  ripple_sub(c, u, v, cmp.offset);
  ripple_add(c, u, v);
  c.append(Gate::cx(u[0], g_swap));
  c.append(Gate::mcx({u[0], v[0], cmp.offset}, g_swap));
  ripple_sub(c, u, v, cmp.offset);
  ripple_add(c, u, v);
  c.free_ancilla(cmp);

  for (size_t j = 0; j < u.size(); ++j) cswap(c, g_swap, u[j], v[j]);
  for (size_t j = 0; j < r.size(); ++j) cswap(c, g_swap, r[j], s[j]);

  // Canonical step: if u odd (both operands odd): u -= v, r += s. Then the
  // unconditional shifts shared by both branches.
  c.append(Gate::cx(u[0], g_odd));

  QubitRange zm = c.alloc_ancilla(static_cast<uint32_t>(u.size()));
  ctrl_copy(c, g_odd, v, wires_of(zm), OriginTag::Arith);
  ripple_sub(c, wires_of(zm), u);
  ctrl_copy(c, g_odd, v, wires_of(zm), OriginTag::Uncompute);
  c.free_ancilla(zm);

  QubitRange zw = c.alloc_ancilla(static_cast<uint32_t>(r.size()));
  ctrl_copy(c, g_odd, s, wires_of(zw), OriginTag::Arith);
  ripple_add(c, wires_of(zw), r);
  ctrl_copy(c, g_odd, s, wires_of(zw), OriginTag::Uncompute);
  c.free_ancilla(zw);

  rot_right(c, u);
  rot_left(c, s);

  for (size_t j = 0; j < u.size(); ++j) cswap(c, g_swap, u[j], v[j]);
  for (size_t j = 0; j < r.size(); ++j) cswap(c, g_swap, r[j], s[j]);
}

}  // namespace

ModRegister::ModRegister(Wires w, uint64_t p) : bits(std::move(w)), modulus(p) {
  if (p < 3 || p % 2 == 0) throw Error("ModRegister: modulus must be odd and >= 3");
  if (bits.size() != field_bits(p)) {
    throw WidthMismatch("ModRegister: width " + std::to_string(bits.size()) +
                        " != ceil(log2 " + std::to_string(p) + ")");
  }
}

void ripple_add(Circuit& c, const Wires& a, const Wires& b,
                std::optional<uint32_t> carry_out) {
  if (a.size() != b.size() || a.empty()) {
    throw WidthMismatch("ripple_add: operand widths differ");
  }
  assert_disjoint(a, b, "ripple_add");
  if (carry_out) {
    assert_disjoint(a, {*carry_out}, "ripple_add carry");
    assert_disjoint(b, {*carry_out}, "ripple_add carry");
  }
  const size_t n = a.size();
  QubitRange cin = c.alloc_ancilla(1);

  auto maj = [&](uint32_t x, uint32_t y, uint32_t z) {
    c.append(Gate::cx(z, y));
    c.append(Gate::cx(z, x));
    c.append(Gate::ccx(x, y, z));
  };
  auto uma = [&](uint32_t x, uint32_t y, uint32_t z) {
    c.append(Gate::ccx(x, y, z));
    c.append(Gate::cx(z, x));
    c.append(Gate::cx(x, y));
  };

  maj(cin.offset, b[0], a[0]);
  for (size_t i = 1; i < n; ++i) maj(a[i - 1], b[i], a[i]);
  if (carry_out) c.append(Gate::cx(a[n - 1], *carry_out));
  for (size_t i = n; i-- > 1;) uma(a[i - 1], b[i], a[i]);
  uma(cin.offset, b[0], a[0]);

  c.free_ancilla(cin);
}

void ripple_sub(Circuit& c, const Wires& a, const Wires& b,
                std::optional<uint32_t> borrow_out) {
  size_t mark = c.size();
  ripple_add(c, a, b, borrow_out);
  c.reverse_range(mark);
}

void load_const(Circuit& c, const Wires& w, uint64_t k, OriginTag tag) {
  for (size_t i = 0; i < w.size(); ++i) {
    if ((k >> i) & 1) c.append(Gate::x(w[i], tag));
  }
}

void plain_add_const(Circuit& c, const Wires& w, uint64_t k) {
  QubitRange kreg = c.alloc_ancilla(static_cast<uint32_t>(w.size()));
  Wires kw = wires_of(kreg);
  load_const(c, kw, k, OriginTag::ConstLoad);
  ripple_add(c, kw, w);
  load_const(c, kw, k, OriginTag::Uncompute);
  c.free_ancilla(kreg);
}

void plain_sub_const(Circuit& c, const Wires& w, uint64_t k) {
  size_t mark = c.size();
  plain_add_const(c, w, k);
  c.reverse_range(mark);
}

void add_reg_mod(Circuit& c, const ModRegister& a, const ModRegister& b) {
  assert_same_field(a, b, "add_reg_mod");
  assert_disjoint(a.bits, b.bits, "add_reg_mod");
  const uint64_t p = a.modulus;
  const unsigned m = a.width();

  QubitRange ahi = c.alloc_ancilla(1);
  QubitRange bhi = c.alloc_ancilla(1);
  QubitRange flag = c.alloc_ancilla(1);
  Wires aw = concat(a.bits, wires_of(ahi));
  Wires bw = concat(b.bits, wires_of(bhi));

  ripple_add(c, aw, bw);            // b = a + b on m+1 bits
  plain_sub_const(c, bw, p);        // b -= p; top bit set iff a + b < p
  c.append(Gate::cx(bw[m], flag.offset));
  {
    QubitRange kreg = c.alloc_ancilla(m + 1);
    Wires kw = wires_of(kreg);
    ctrl_load_const(c, flag.offset, kw, p, OriginTag::ConstLoad);
    ripple_add(c, kw, bw);          // add p back when we undershot
    ctrl_load_const(c, flag.offset, kw, p, OriginTag::Uncompute);
    c.free_ancilla(kreg);
  }
  // flag == [a+b < p]; the reduced result r satisfies [r < a] == [a+b >= p],
  // so one comparison clears it.
  ripple_sub(c, aw, bw, flag.offset);
  ripple_add(c, aw, bw);
  c.append(Gate::x(flag.offset));

  c.free_ancilla(ahi);
  c.free_ancilla(bhi);
  c.free_ancilla(flag);
}

void sub_reg_mod(Circuit& c, const ModRegister& a, const ModRegister& b) {
  size_t mark = c.size();
  add_reg_mod(c, a, b);
  c.reverse_range(mark);
}

void add_const_mod(Circuit& c, const ModRegister& r, uint64_t k) {
  k %= r.modulus;
  QubitRange kreg = c.alloc_ancilla(r.width());
  Wires kw = wires_of(kreg);
  load_const(c, kw, k, OriginTag::ConstLoad);
  add_reg_mod(c, ModRegister(kw, r.modulus), r);
  load_const(c, kw, k, OriginTag::Uncompute);
  c.free_ancilla(kreg);
}

void sub_const_mod(Circuit& c, const ModRegister& r, uint64_t k) {
  size_t mark = c.size();
  add_const_mod(c, r, k);
  c.reverse_range(mark);
}

void dbl_mod(Circuit& c, const ModRegister& r) {
  const uint64_t p = r.modulus;
  const unsigned m = r.width();
  QubitRange hi = c.alloc_ancilla(1);
  QubitRange flag = c.alloc_ancilla(1);
  Wires v = concat(r.bits, wires_of(hi));

  rot_left(c, v);                   // v = 2t, freed low bit is 0
  plain_sub_const(c, v, p);
  c.append(Gate::cx(v[m], flag.offset));  // borrow: 2t < p
  ctrl_add_const(c, flag.offset, v, p);
  // Reduced iff the result is odd (p odd), so parity recovers the flag.
  c.append(Gate::cx(v[0], flag.offset));
  c.append(Gate::x(flag.offset));

  c.free_ancilla(hi);
  c.free_ancilla(flag);
}

void halve_mod(Circuit& c, const ModRegister& r) {
  size_t mark = c.size();
  dbl_mod(c, r);
  c.reverse_range(mark);
}

void mul_const_mod(Circuit& c, const ModRegister& x, uint64_t k,
                   const ModRegister& out) {
  assert_same_field(x, out, "mul_const_mod");
  assert_disjoint(x.bits, out.bits, "mul_const_mod");
  const uint64_t p = x.modulus;
  const unsigned m = x.width();
  k %= p;

  QubitRange kreg = c.alloc_ancilla(m);
  Wires kw = wires_of(kreg);
  uint64_t shifted = k;
  for (unsigned i = 0; i < m; ++i) {
    ctrl_load_const(c, x.bits[i], kw, shifted, OriginTag::ConstLoad);
    add_reg_mod(c, ModRegister(kw, p), out);
    ctrl_load_const(c, x.bits[i], kw, shifted, OriginTag::Uncompute);
    shifted = shifted * 2 % p;
  }
  c.free_ancilla(kreg);
}

void mul_reg_mod(Circuit& c, const ModRegister& a, const ModRegister& b,
                 const ModRegister& out) {
  assert_same_field(a, b, "mul_reg_mod");
  assert_same_field(a, out, "mul_reg_mod");
  assert_disjoint(a.bits, b.bits, "mul_reg_mod");
  assert_disjoint(a.bits, out.bits, "mul_reg_mod");
  assert_disjoint(b.bits, out.bits, "mul_reg_mod");
  const uint64_t p = a.modulus;
  const unsigned m = a.width();

  QubitRange t = c.alloc_ancilla(m);
  QubitRange z = c.alloc_ancilla(m);
  ModRegister tr(t, p);
  ModRegister zr(z, p);

  copy_wires(c, b.bits, tr.bits, OriginTag::Arith);
  for (unsigned i = 0; i < m; ++i) {
    // out += a_i ? t : 0. A controlled copy keeps the modular add itself
    // uncontrolled (adding zero is the identity on in-contract values).
    ctrl_copy(c, a.bits[i], tr.bits, zr.bits, OriginTag::Arith);
    add_reg_mod(c, zr, out);
    ctrl_copy(c, a.bits[i], tr.bits, zr.bits, OriginTag::Uncompute);
    if (i + 1 < m) dbl_mod(c, tr);
  }
  for (unsigned i = m; i-- > 1;) halve_mod(c, tr);
  copy_wires(c, b.bits, tr.bits, OriginTag::Uncompute);

  c.free_ancilla(t);
  c.free_ancilla(z);
}

void kaliski_inv(Circuit& c, const ModRegister& x, const ModRegister& out) {
  assert_same_field(x, out, "kaliski_inv");
  assert_disjoint(x.bits, out.bits, "kaliski_inv");
  const uint64_t p = x.modulus;
  const unsigned m = x.width();
  const unsigned w = 2 * m + 2;   // r, s absorb up to m dead-round doublings
  const unsigned rounds = 2 * m;

  QubitRange u = c.alloc_ancilla(m);
  QubitRange v = c.alloc_ancilla(m);
  QubitRange r = c.alloc_ancilla(w);
  QubitRange s = c.alloc_ancilla(w);
  QubitRange sel = c.alloc_ancilla(2 * rounds);  // per-round branch record
  QubitRange red = c.alloc_ancilla(m + 2);       // reduction borrow record
  Wires uw = wires_of(u), vw = wires_of(v), rw = wires_of(r), sw = wires_of(s);

  const size_t mark = c.size();

  load_const(c, uw, p, OriginTag::ConstLoad);
  copy_wires(c, x.bits, vw, OriginTag::Arith);
  c.append(Gate::x(sw[0], OriginTag::ConstLoad));  // s = 1

  for (unsigned t = 0; t < rounds; ++t) {
    kaliski_round(c, uw, vw, rw, sw, sel[2 * t], sel[2 * t + 1]);
  }
  // After 2m rounds, x*r = -2^{2m} (mod p) with r < 2^{2m+1}. Reduce r mod p
  // by trial subtraction of p<<j; each borrow bit stays recorded.
  for (unsigned j = m + 2; j-- > 0;) {
    uint64_t pj = p << j;
    plain_sub_const(c, rw, pj);
    c.append(Gate::cx(rw[w - 1], red[j]));
    ctrl_add_const(c, red[j], rw, pj);
  }
  // Sign fix r <- p - r (bitwise complement plus p+1, mod 2^w).
  for (uint32_t q : rw) c.append(Gate::x(q));
  plain_add_const(c, rw, p + 1);
  // Multiply by 2^{-2m}: the value now fits in the low m bits.
  ModRegister rlow(Wires(rw.begin(), rw.begin() + m), p);
  for (unsigned t = 0; t < rounds; ++t) halve_mod(c, rlow);

  const size_t copy_mark = c.size();
  copy_wires(c, rlow.bits, out.bits, OriginTag::Arith);

  // Compute-copy-uncompute: every scratch bit above is restored, for
  // in-contract and off-contract inputs alike.
  c.append_uncompute_range(mark, copy_mark);

  c.free_ancilla(u);
  c.free_ancilla(v);
  c.free_ancilla(r);
  c.free_ancilla(s);
  c.free_ancilla(sel);
  c.free_ancilla(red);
}

}  // namespace revec
