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

#include <doctest.h>

#include <set>

#include "revec/rev_arith.hpp"

using namespace revec;

namespace {

bool ancillas_clean(const Circuit& c, const BasisState& s) {
  for (uint32_t q : c.ancilla_indices()) {
    if (s.get(q)) return false;
  }
  return true;
}

// Full-space injectivity: data registers swept exhaustively, ancillas 0.
void check_injective(const Circuit& c, const std::vector<QubitRange>& data) {
  uint32_t width = 0;
  for (const auto& r : data) width += r.width;
  std::set<std::string> images;
  for (uint64_t v = 0; v < (uint64_t{1} << width); ++v) {
    BasisState s(c.qubit_count());
    uint64_t rest = v;
    for (const auto& r : data) {
      s.write(r, rest & ((uint64_t{1} << r.width) - 1));
      rest >>= r.width;
    }
    images.insert(simulate(c, s).str());
  }
  CHECK(images.size() == (uint64_t{1} << width));
}

}  // namespace

TEST_SUITE("rev_arith") {

TEST_CASE("ripple_add matches integer addition exhaustively") {
  for (uint32_t n : {1u, 3u, 4u}) {
    Circuit c = Circuit::with_registers({{"a", n}, {"b", n}, {"cout", 1}});
    ripple_add(c, wires_of(c.reg("a")), wires_of(c.reg("b")), c.reg("cout")[0]);
    for (uint64_t a = 0; a < (1u << n); ++a) {
      for (uint64_t b = 0; b < (1u << n); ++b) {
        BasisState s(c.qubit_count());
        s.write(c.reg("a"), a);
        s.write(c.reg("b"), b);
        BasisState out = simulate(c, s);
        CHECK(out.read(c.reg("a")) == a);
        CHECK(out.read(c.reg("b")) == ((a + b) & ((1u << n) - 1)));
        CHECK(out.read(c.reg("cout")) == ((a + b) >> n));
        CHECK(ancillas_clean(c, out));
      }
    }
  }
}

TEST_CASE("ripple_sub computes difference and borrow") {
  const uint32_t n = 3;
  Circuit c = Circuit::with_registers({{"a", n}, {"b", n}, {"bout", 1}});
  ripple_sub(c, wires_of(c.reg("a")), wires_of(c.reg("b")), c.reg("bout")[0]);
  for (uint64_t a = 0; a < (1u << n); ++a) {
    for (uint64_t b = 0; b < (1u << n); ++b) {
      BasisState s(c.qubit_count());
      s.write(c.reg("a"), a);
      s.write(c.reg("b"), b);
      BasisState out = simulate(c, s);
      CHECK(out.read(c.reg("b")) == ((b - a) & ((1u << n) - 1)));
      CHECK(out.read(c.reg("bout")) == (b < a ? 1 : 0));
    }
  }
}

TEST_CASE("plain_add_const adds modulo 2^w") {
  const uint32_t n = 4;
  for (uint64_t k : {0ull, 1ull, 7ull, 13ull}) {
    Circuit c = Circuit::with_registers({{"v", n}});
    plain_add_const(c, wires_of(c.reg("v")), k);
    for (uint64_t v = 0; v < (1u << n); ++v) {
      BasisState s(c.qubit_count());
      s.write(c.reg("v"), v);
      BasisState out = simulate(c, s);
      CHECK(out.read(c.reg("v")) == ((v + k) & 0xf));
      CHECK(ancillas_clean(c, out));
    }
  }
}

TEST_CASE("add_const_mod matches (x + k) mod p exhaustively") {
  for (uint64_t p : {5ull, 7ull}) {
    const unsigned m = field_bits(p);
    for (uint64_t k = 0; k < p; ++k) {
      Circuit c = Circuit::with_registers({{"x", m}});
      ModRegister x(c.reg("x"), p);
      add_const_mod(c, x, k);
      for (uint64_t v = 0; v < p; ++v) {
        BasisState s(c.qubit_count());
        s.write(c.reg("x"), v);
        BasisState out = simulate(c, s);
        CHECK(out.read(c.reg("x")) == (v + k) % p);
        CHECK(ancillas_clean(c, out));
      }
    }
  }
}

TEST_CASE("add_const_mod frozen example and k=0 identity") {
  const uint64_t p = 5;
  Circuit c = Circuit::with_registers({{"x", 3}});
  ModRegister x(c.reg("x"), p);
  add_const_mod(c, x, 4);
  BasisState s(c.qubit_count());
  s.write(c.reg("x"), 3);
  CHECK(simulate(c, s).read(c.reg("x")) == 2);
}

TEST_CASE("sub_const_mod is the gate-reversed inverse of add_const_mod") {
  const uint64_t p = 7;
  Circuit add = Circuit::with_registers({{"x", 3}});
  add_const_mod(add, ModRegister(add.reg("x"), p), 4);
  Circuit sub = Circuit::with_registers({{"x", 3}});
  sub_const_mod(sub, ModRegister(sub.reg("x"), p), 4);
  // gate-list reversal
  std::vector<Gate> reversed(add.gates().rbegin(), add.gates().rend());
  CHECK(sub.gates() == reversed);
  for (uint64_t v = 0; v < p; ++v) {
    BasisState s(add.qubit_count());
    s.write(add.reg("x"), v);
    CHECK(simulate(sub, simulate(add, s)) == s);
    BasisState t(sub.qubit_count());
    t.write(sub.reg("x"), 2);
    CHECK(simulate(sub, t).read(sub.reg("x")) == (2 + p - 4 % p) % p);
  }
}

TEST_CASE("add_reg_mod matches the classical grid and rejects aliasing") {
  for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    const unsigned m = field_bits(p);
    Circuit c = Circuit::with_registers({{"a", m}, {"b", m}});
    ModRegister a(c.reg("a"), p), b(c.reg("b"), p);
    add_reg_mod(c, a, b);
    for (uint64_t va = 0; va < p; ++va) {
      for (uint64_t vb = 0; vb < p; ++vb) {
        BasisState s(c.qubit_count());
        s.write(c.reg("a"), va);
        s.write(c.reg("b"), vb);
        BasisState out = simulate(c, s);
        CHECK(out.read(c.reg("a")) == va);
        CHECK(out.read(c.reg("b")) == (va + vb) % p);
        CHECK(ancillas_clean(c, out));
      }
    }
  }
  Circuit c = Circuit::with_registers({{"a", 3}});
  ModRegister a(c.reg("a"), 5);
  CHECK_THROWS_AS(add_reg_mod(c, a, a), AliasedRegisters);
}

TEST_CASE("add_reg_mod then sub_reg_mod is the identity (p=13)") {
  const uint64_t p = 13;
  const unsigned m = field_bits(p);
  Circuit c = Circuit::with_registers({{"a", m}, {"b", m}});
  ModRegister a(c.reg("a"), p), b(c.reg("b"), p);
  add_reg_mod(c, a, b);
  sub_reg_mod(c, a, b);
  for (uint64_t va = 0; va < p; ++va) {
    for (uint64_t vb = 0; vb < p; ++vb) {
      BasisState s(c.qubit_count());
      s.write(c.reg("a"), va);
      s.write(c.reg("b"), vb);
      CHECK(simulate(c, s) == s);
    }
  }
}

TEST_CASE("dbl_mod and halve_mod act as x2 and /2 mod p") {
  for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    const unsigned m = field_bits(p);
    Circuit c = Circuit::with_registers({{"t", m}});
    ModRegister t(c.reg("t"), p);
    dbl_mod(c, t);
    Circuit h = Circuit::with_registers({{"t", m}});
    halve_mod(h, ModRegister(h.reg("t"), p));
    const uint64_t inv2 = fp_inv(2, p);
    for (uint64_t v = 0; v < p; ++v) {
      BasisState s(c.qubit_count());
      s.write(c.reg("t"), v);
      BasisState out = simulate(c, s);
      CHECK(out.read(c.reg("t")) == 2 * v % p);
      CHECK(ancillas_clean(c, out));
      BasisState hs(h.qubit_count());
      hs.write(h.reg("t"), v);
      CHECK(simulate(h, hs).read(h.reg("t")) == v * inv2 % p);
    }
  }
}

TEST_CASE("mul_const_mod covers identity, zero and the exhaustive grid") {
  const uint64_t p = 5;
  const unsigned m = field_bits(p);
  for (uint64_t k = 0; k < p; ++k) {
    Circuit c = Circuit::with_registers({{"x", m}, {"out", m}});
    mul_const_mod(c, ModRegister(c.reg("x"), p), k, ModRegister(c.reg("out"), p));
    for (uint64_t v = 0; v < p; ++v) {
      BasisState s(c.qubit_count());
      s.write(c.reg("x"), v);
      BasisState out = simulate(c, s);
      CHECK(out.read(c.reg("x")) == v);
      CHECK(out.read(c.reg("out")) == k * v % p);
      CHECK(ancillas_clean(c, out));
    }
  }
}

TEST_CASE("mul_reg_mod matches the classical grid on p=5 and p=7") {
  for (uint64_t p : {5ull, 7ull}) {
    const unsigned m = field_bits(p);
    Circuit c = Circuit::with_registers({{"a", m}, {"b", m}, {"out", m}});
    ModRegister a(c.reg("a"), p), b(c.reg("b"), p), out(c.reg("out"), p);
    mul_reg_mod(c, a, b, out);
    for (uint64_t va = 0; va < p; ++va) {
      for (uint64_t vb = 0; vb < p; ++vb) {
        BasisState s(c.qubit_count());
        s.write(c.reg("a"), va);
        s.write(c.reg("b"), vb);
        BasisState o = simulate(c, s);
        CHECK(o.read(c.reg("a")) == va);
        CHECK(o.read(c.reg("b")) == vb);
        CHECK(o.read(c.reg("out")) == va * vb % p);
        CHECK(ancillas_clean(c, o));
      }
    }
  }
  Circuit c = Circuit::with_registers({{"a", 3}, {"out", 3}});
  ModRegister a(c.reg("a"), 5), out(c.reg("out"), 5);
  CHECK_THROWS_AS(mul_reg_mod(c, a, a, out), AliasedRegisters);
}

TEST_CASE("kaliski_inv matches extended Euclid on four primes") {
  for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    const unsigned m = field_bits(p);
    Circuit c = Circuit::with_registers({{"x", m}, {"out", m}});
    kaliski_inv(c, ModRegister(c.reg("x"), p), ModRegister(c.reg("out"), p));
    for (uint64_t v = 1; v < p; ++v) {
      BasisState s(c.qubit_count());
      s.write(c.reg("x"), v);
      BasisState out = simulate(c, s);
      CHECK(out.read(c.reg("x")) == v);
      CHECK(out.read(c.reg("out")) == fp_inv(v, p));
      CHECK(ancillas_clean(c, out));
    }
    // x = 0 is off-contract: some fixed value, but scratch still clean.
    BasisState z(c.qubit_count());
    BasisState out0 = simulate(c, z);
    CHECK(ancillas_clean(c, out0));
  }
}

TEST_CASE("kaliski_inv stays exact at the scaling-study widths") {
  for (uint64_t p : {17ull, 23ull}) {
    const unsigned m = field_bits(p);
    Circuit c = Circuit::with_registers({{"x", m}, {"out", m}});
    kaliski_inv(c, ModRegister(c.reg("x"), p), ModRegister(c.reg("out"), p));
    for (uint64_t v = 1; v < p; ++v) {
      BasisState s(c.qubit_count());
      s.write(c.reg("x"), v);
      BasisState out = simulate(c, s);
      CHECK(out.read(c.reg("out")) == fp_inv(v, p));
      CHECK(ancillas_clean(c, out));
    }
  }
}

TEST_CASE("kaliski_inv is an XOR-accumulator (self-inverse on out)") {
  const uint64_t p = 7;
  const unsigned m = field_bits(p);
  Circuit c = Circuit::with_registers({{"x", m}, {"out", m}});
  ModRegister x(c.reg("x"), p), out(c.reg("out"), p);
  kaliski_inv(c, x, out);
  kaliski_inv(c, x, out);
  for (uint64_t v = 1; v < p; ++v) {
    BasisState s(c.qubit_count());
    s.write(c.reg("x"), v);
    CHECK(simulate(c, s) == s);
  }
}

TEST_CASE("gadgets followed by their inverses are the identity (p=11)") {
  const uint64_t p = 11;
  const unsigned m = field_bits(p);
  Circuit c = Circuit::with_registers({{"a", m}, {"b", m}});
  ModRegister a(c.reg("a"), p), b(c.reg("b"), p);
  size_t mark = c.size();
  add_const_mod(c, a, 7);
  add_reg_mod(c, a, b);
  dbl_mod(c, b);
  c.append_inverse_since(mark);
  for (uint64_t va = 0; va < p; ++va) {
    for (uint64_t vb = 0; vb < p; ++vb) {
      BasisState s(c.qubit_count());
      s.write(c.reg("a"), va);
      s.write(c.reg("b"), vb);
      CHECK(simulate(c, s) == s);
    }
  }
}

TEST_CASE("full-space injectivity, off-contract inputs included") {
  // m = 3 data bits per register; ancillas start at 0.
  const uint64_t p = 5;
  Circuit c1 = Circuit::with_registers({{"x", 3}});
  add_const_mod(c1, ModRegister(c1.reg("x"), p), 3);
  check_injective(c1, {c1.reg("x")});

  Circuit c2 = Circuit::with_registers({{"a", 3}, {"b", 3}});
  add_reg_mod(c2, ModRegister(c2.reg("a"), p), ModRegister(c2.reg("b"), p));
  check_injective(c2, {c2.reg("a"), c2.reg("b")});

  Circuit c3 = Circuit::with_registers({{"x", 3}, {"out", 3}});
  kaliski_inv(c3, ModRegister(c3.reg("x"), p), ModRegister(c3.reg("out"), p));
  check_injective(c3, {c3.reg("x"), c3.reg("out")});
}

TEST_CASE("gate counts scale with the register width") {
  auto kaliski_gates = [](uint64_t p) {
    const unsigned m = field_bits(p);
    Circuit c = Circuit::with_registers({{"x", m}, {"out", m}});
    kaliski_inv(c, ModRegister(c.reg("x"), p), ModRegister(c.reg("out"), p));
    return c.gates().size();
  };
  CHECK(kaliski_gates(11) > kaliski_gates(5));  // m=4 vs m=3
}

TEST_CASE("register width must match the field") {
  CHECK_THROWS_AS(ModRegister(Wires{0, 1}, 5), WidthMismatch);
  CHECK_THROWS_AS(ModRegister(Wires{0, 1, 2, 3}, 5), WidthMismatch);
}

TEST_CASE("classical replay of the inversion round structure") {
  // Mirrors the circuit's round semantics in plain integers and checks the
  // invariants the register sizing rests on: after exactly 2m rounds,
  // x * r = -2^(2m) (mod p), and r, s never outgrow 2m+2 bits.
  for (uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 23ull, 101ull, 251ull}) {
    const unsigned m = field_bits(p);
    const uint64_t cap = uint64_t{1} << (2 * m + 2);
    for (uint64_t x = 1; x < p; ++x) {
      uint64_t u = p, v = x, r = 0, s = 1;
      for (unsigned round = 0; round < 2 * m; ++round) {
        bool swapped = (u & 1) && !((v & 1) && v < u);
        if (swapped) {
          std::swap(u, v);
          std::swap(r, s);
        }
        if (u & 1) {  // both operands odd in the live case
          u -= v;
          r += s;
        }
        u >>= 1;
        s <<= 1;
        if (swapped) {
          std::swap(u, v);
          std::swap(r, s);
        }
        CHECK(u < (uint64_t{1} << m));
        CHECK(v < (uint64_t{1} << m));
        CHECK(r < cap);
        CHECK(s < cap);
      }
      // x * r = -2^(2m) (mod p)
      uint64_t pow = 1;
      for (unsigned i = 0; i < 2 * m; ++i) pow = pow * 2 % p;
      CHECK(x % p * (r % p) % p == (p - pow) % p);
      // The correction phase then yields the true inverse.
      uint64_t w = (p - r % p) % p;
      uint64_t inv2 = fp_inv(2, p);
      for (unsigned i = 0; i < 2 * m; ++i) w = w * inv2 % p;
      CHECK(w == fp_inv(x, p));
    }
  }
}

}  // TEST_SUITE
