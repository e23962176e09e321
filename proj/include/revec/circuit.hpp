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
 * Reversible-circuit IR over the classical gate set {X, CX, CCX, MCX, SWAP},
 * with named data registers, a pooled ancilla allocator, a control-context
 * stack for building controlled gadgets, and a deterministic basis-state
 * simulator. Every circuit in this IR denotes a permutation of bit vectors.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revec/errors.hpp"

namespace revec {

enum class GateKind : uint8_t { X, CX, CCX, MCX, Swap };

/// Provenance of a gate within a gadget. CONST_LOAD marks X/CX gates that
/// load classical constants into registers; BuggyConstSkip exempts exactly
/// these from an enclosing control context.
enum class OriginTag : uint8_t { ConstLoad, Arith, Uncompute, ControlGlue };

enum class ControlMode : uint8_t { ControlAll, BuggyConstSkip };

std::string to_string(GateKind k);
std::string to_string(OriginTag t);
std::string to_string(ControlMode m);

struct Gate {
  GateKind kind;
  OriginTag tag;
  std::vector<uint32_t> controls;  // empty for X and SWAP
  std::vector<uint32_t> targets;   // one qubit; two for SWAP

  static Gate x(uint32_t t, OriginTag tag = OriginTag::Arith);
  static Gate cx(uint32_t c, uint32_t t, OriginTag tag = OriginTag::Arith);
  static Gate ccx(uint32_t c0, uint32_t c1, uint32_t t,
                  OriginTag tag = OriginTag::Arith);
  static Gate mcx(std::vector<uint32_t> controls, uint32_t t,
                  OriginTag tag = OriginTag::Arith);
  static Gate swap(uint32_t t0, uint32_t t1, OriginTag tag = OriginTag::Arith);

  /// Same gate with one more control; SWAP is not directly controllable.
  Gate with_control(uint32_t c) const;

  bool operator==(const Gate& o) const = default;

private:
  void validate() const;
};

/// A contiguous run of qubits forming a named register.
struct QubitRange {
  uint32_t offset = 0;
  uint32_t width = 0;
  uint32_t operator[](uint32_t i) const { return offset + i; }
  bool operator==(const QubitRange& o) const = default;
};

/// Logical register: an ordered list of qubit indices. Named data registers
/// are contiguous; arithmetic internals freely concatenate wire lists.
using Wires = std::vector<uint32_t>;

Wires wires_of(const QubitRange& r);
Wires concat(const Wires& a, const Wires& b);

class Circuit {
public:
  Circuit() = default;

  /// Circuit with the given named data registers laid out contiguously
  /// from qubit 0 in the order given.
  static Circuit with_registers(
      const std::vector<std::pair<std::string, uint32_t>>& regs);

  uint32_t qubit_count() const { return qubit_count_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::map<std::string, QubitRange>& registers() const { return registers_; }

  /// Same registers, ancillas and pool state, empty gate list.
  Circuit shape_clone() const;

  QubitRange reg(const std::string& name) const;
  bool is_ancilla(uint32_t q) const { return ancilla_[q]; }
  std::vector<uint32_t> ancilla_indices() const;

  QubitRange add_register(const std::string& name, uint32_t width);

  /// Takes `width` zero-initialised scratch qubits from the free pool,
  /// extending the circuit if the pool cannot supply a contiguous run.
  /// Gadgets must return them to |0> before release on in-contract inputs.
  QubitRange alloc_ancilla(uint32_t width);
  void free_ancilla(const QubitRange& r);

  /// Appends a gate, rewriting it under the active control context: every
  /// gate gains the context controls, except that under BuggyConstSkip a
  /// CONST_LOAD gate is copied with no added control. SWAPs are decomposed
  /// to 3 CX before controls are added.
  void append(const Gate& g);

  /// Appends gates [begin, end) again in reverse order. Each gate kind is
  /// self-inverse, so this emits the inverse of the recorded segment.
  void append_inverse_range(size_t begin, size_t end);
  void append_inverse_since(size_t mark) { append_inverse_range(mark, size()); }

  /// Bennett mirror: like append_inverse_range, but a replayed CONST_LOAD
  /// becomes an UNCOMPUTE: in the uncompute pass the same X gates unload
  /// the constant they loaded on the way in.
  void append_uncompute_range(size_t begin, size_t end);

  /// Reverses gates [mark, size()) in place, replacing the recorded segment
  /// with its inverse.
  void reverse_range(size_t mark);

  /// Control context: while active, appended gates are conditioned on `q`.
  void push_control(uint32_t q, ControlMode mode);
  void pop_control();

  size_t size() const { return gates_.size(); }

private:
  void append_raw(const Gate& g);
  void check_qubit(uint32_t q) const;

  uint32_t qubit_count_ = 0;
  std::vector<Gate> gates_;
  std::map<std::string, QubitRange> registers_;
  std::vector<bool> ancilla_;
  std::vector<bool> free_;  // pooled ancillas currently available
  struct ControlFrame {
    uint32_t qubit;
    ControlMode mode;
  };
  std::vector<ControlFrame> control_stack_;
};

/// Bit vector over a circuit's qubits; the simulation substrate.
struct BasisState {
  std::vector<uint8_t> bits;

  explicit BasisState(uint32_t n = 0) : bits(n, 0) {}

  uint32_t size() const { return static_cast<uint32_t>(bits.size()); }
  bool get(uint32_t q) const { return bits[q] != 0; }
  void set(uint32_t q, bool v) { bits[q] = v ? 1 : 0; }
  void flip(uint32_t q) { bits[q] ^= 1; }

  uint64_t read(const Wires& w) const;
  uint64_t read(const QubitRange& r) const { return read(wires_of(r)); }
  void write(const Wires& w, uint64_t value);
  void write(const QubitRange& r, uint64_t value) { write(wires_of(r), value); }

  std::string str() const;  // q0 first

  bool operator==(const BasisState& o) const = default;
  bool operator<(const BasisState& o) const { return bits < o.bits; }
};

/// Applies each gate in order as the classical reversible function it names.
/// Throws WidthMismatch when the state length disagrees with the circuit.
BasisState simulate(const Circuit& c, const BasisState& input);

/// Applies only gates [begin, end); used for loop-invariant snapshots.
BasisState simulate_range(const Circuit& c, const BasisState& input,
                          size_t begin, size_t end);

/// Gate-list reversal. Each gate is self-inverse, so
/// simulate(inverse(c), simulate(c, s)) == s for every s.
Circuit inverse(const Circuit& c);

/// Sequential composition on an identical register table.
Circuit compose(const Circuit& a, const Circuit& b);

/// Name of the control register added by add_control.
inline constexpr const char* kControlRegisterName = "ctrl";

/// Wraps a circuit with one fresh control qubit, appended as the highest
/// qubit index and registered under "ctrl". ControlAll conditions every
/// gate on it; BuggyConstSkip copies CONST_LOAD gates uncontrolled.
Circuit add_control(const Circuit& c, ControlMode mode);

/// Rewrites SWAP as 3 CX and MCX with k >= 3 controls as (2k-3) CCX using
/// k-2 clean scratch qubits appended past the existing ones. Used for cost
/// accounting and OpenQASM export; simulation semantics are unchanged on
/// the original qubits.
Circuit decompose_for_accounting(const Circuit& c);

/// OpenQASM 2.0 text (gates x, cx, ccx; SWAP/MCX decomposed first).
std::string export_qasm(const Circuit& c);

}  // namespace revec
