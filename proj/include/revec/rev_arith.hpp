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
 * Reversible modular-arithmetic gadgets over m-bit registers holding values
 * in [0, p), m = ceil(log2 p). Adders are ripple-carry (majority /
 * unmajority) with one carry ancilla; modular reduction is compare and
 * conditional subtract; inversion is a fixed-round binary almost-inverse
 * (Kaliski) wrapped in compute-copy-uncompute so every scratch qubit is
 * returned to |0> unconditionally.
 *
 * Contracts hold for register values in [0, p) with ancillas at 0. Inputs
 * outside that range are off-contract: the action is still a permutation of
 * the full bit space (every gate is reversible) but no value is promised.
 *
 * Constants enter through X gates tagged CONST_LOAD on scratch registers,
 * with the matching unload tagged UNCOMPUTE. That asymmetry is what makes
 * the BuggyConstSkip control mode observable.
 */

#pragma once

#include <cstdint>
#include <optional>

#include "revec/circuit.hpp"
#include "revec/ec_ref.hpp"

namespace revec {

/// Handle to an m-bit register of a circuit holding a value mod p.
struct ModRegister {
  Wires bits;
  uint64_t modulus = 0;

  ModRegister() = default;
  ModRegister(Wires w, uint64_t p);
  ModRegister(const QubitRange& r, uint64_t p) : ModRegister(wires_of(r), p) {}

  unsigned width() const { return static_cast<unsigned>(bits.size()); }
};

// -- plain (non-modular) building blocks ------------------------------------

/// b += a (mod 2^w), equal widths; optionally XORs the carry into
/// *carry_out. Cuccaro ripple-carry; a and the internal carry are restored.
void ripple_add(Circuit& c, const Wires& a, const Wires& b,
                std::optional<uint32_t> carry_out = std::nullopt);

/// b -= a (mod 2^w); optionally XORs the borrow [b_in < a] into *borrow_out.
void ripple_sub(Circuit& c, const Wires& a, const Wires& b,
                std::optional<uint32_t> borrow_out = std::nullopt);

/// value += k (mod 2^w) via a CONST_LOAD-ed scratch register.
void plain_add_const(Circuit& c, const Wires& w, uint64_t k);
void plain_sub_const(Circuit& c, const Wires& w, uint64_t k);

/// X every wire whose bit is set in k.
void load_const(Circuit& c, const Wires& w, uint64_t k, OriginTag tag);

// -- modular gadgets ---------------------------------------------------------

/// |x> -> |x + k mod p>, in place, ancillas restored.
void add_const_mod(Circuit& c, const ModRegister& r, uint64_t k);

/// Inverse of add_const_mod (gate-list reversal): |x> -> |x - k mod p>.
void sub_const_mod(Circuit& c, const ModRegister& r, uint64_t k);

/// |a>|b> -> |a>|a+b mod p>. Throws AliasedRegisters if the registers share
/// a wire.
void add_reg_mod(Circuit& c, const ModRegister& a, const ModRegister& b);

/// |a>|b> -> |a>|b-a mod p>.
void sub_reg_mod(Circuit& c, const ModRegister& a, const ModRegister& b);

/// In-place modular doubling |t> -> |2t mod p> (p odd): shift left through
/// a spare top bit, then reduce; the reduction flag is recovered from the
/// parity of the result.
void dbl_mod(Circuit& c, const ModRegister& r);

/// Inverse of dbl_mod: |t> -> |t * 2^-1 mod p>.
void halve_mod(Circuit& c, const ModRegister& r);

/// |x>|0> -> |x>|k*x mod p> via m conditioned shift-adds of classical
/// constants k*2^i mod p.
void mul_const_mod(Circuit& c, const ModRegister& x, uint64_t k,
                   const ModRegister& out);

/// |a>|b>|0> -> |a>|b>|a*b mod p>. a, b, out pairwise disjoint.
void mul_reg_mod(Circuit& c, const ModRegister& a, const ModRegister& b,
                 const ModRegister& out);

/// |x>|out> -> |x>|out XOR x^-1 mod p> for x in [1, p). Fixed-round binary
/// almost-inverse: exactly 2m main rounds, then a correction phase (full
/// reduction, sign fix, 2m modular halvings); the whole forward pass is
/// uncomputed after copying the result, so scratch is returned to |0> for
/// every input, in contract or not. x = 0 is off-contract and yields an
/// unspecified (but fixed) out value.
void kaliski_inv(Circuit& c, const ModRegister& x, const ModRegister& out);

}  // namespace revec
