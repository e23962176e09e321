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

#include "revec/circuit.hpp"

#include <algorithm>
#include <sstream>

namespace revec {

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::CX: return "cx";
    case GateKind::CCX: return "ccx";
    case GateKind::MCX: return "mcx";
    case GateKind::Swap: return "swap";
  }
  return "?";
}

std::string to_string(OriginTag t) {
  switch (t) {
    case OriginTag::ConstLoad: return "CONST_LOAD";
    case OriginTag::Arith: return "ARITH";
    case OriginTag::Uncompute: return "UNCOMPUTE";
    case OriginTag::ControlGlue: return "CONTROL_GLUE";
  }
  return "?";
}

std::string to_string(ControlMode m) {
  return m == ControlMode::ControlAll ? "all" : "buggy";
}

void Gate::validate() const {
  std::vector<uint32_t> all = controls;
  all.insert(all.end(), targets.begin(), targets.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error("gate qubits must be pairwise distinct");
  }
  switch (kind) {
    case GateKind::X:
      if (!controls.empty() || targets.size() != 1) throw Error("malformed X");
      break;
    case GateKind::CX:
      if (controls.size() != 1 || targets.size() != 1) throw Error("malformed CX");
      break;
    case GateKind::CCX:
      if (controls.size() != 2 || targets.size() != 1) throw Error("malformed CCX");
      break;
    case GateKind::MCX:
      if (controls.size() < 3 || targets.size() != 1) throw Error("malformed MCX");
      break;
    case GateKind::Swap:
      if (!controls.empty() || targets.size() != 2) throw Error("malformed SWAP");
      break;
  }
}

Gate Gate::x(uint32_t t, OriginTag tag) {
  Gate g{GateKind::X, tag, {}, {t}};
  g.validate();
  return g;
}

Gate Gate::cx(uint32_t c, uint32_t t, OriginTag tag) {
  Gate g{GateKind::CX, tag, {c}, {t}};
  g.validate();
  return g;
}

Gate Gate::ccx(uint32_t c0, uint32_t c1, uint32_t t, OriginTag tag) {
  Gate g{GateKind::CCX, tag, {c0, c1}, {t}};
  g.validate();
  return g;
}

Gate Gate::mcx(std::vector<uint32_t> controls, uint32_t t, OriginTag tag) {
  if (controls.size() == 0) return x(t, tag);
  if (controls.size() == 1) return cx(controls[0], t, tag);
  if (controls.size() == 2) return ccx(controls[0], controls[1], t, tag);
  Gate g{GateKind::MCX, tag, std::move(controls), {t}};
  g.validate();
  return g;
}

Gate Gate::swap(uint32_t t0, uint32_t t1, OriginTag tag) {
  Gate g{GateKind::Swap, tag, {}, {t0, t1}};
  g.validate();
  return g;
}

Gate Gate::with_control(uint32_t c) const {
  if (kind == GateKind::Swap) {
    throw Error("SWAP must be decomposed before adding controls");
  }
  std::vector<uint32_t> ctrls = controls;
  ctrls.push_back(c);
  return mcx(std::move(ctrls), targets[0], tag);
}

Wires wires_of(const QubitRange& r) {
  Wires w(r.width);
  for (uint32_t i = 0; i < r.width; ++i) w[i] = r.offset + i;
  return w;
}

Wires concat(const Wires& a, const Wires& b) {
  Wires w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Circuit Circuit::with_registers(
    const std::vector<std::pair<std::string, uint32_t>>& regs) {
  Circuit c;
  for (const auto& [name, width] : regs) c.add_register(name, width);
  return c;
}

Circuit Circuit::shape_clone() const {
  Circuit c = *this;
  c.gates_.clear();
  c.control_stack_.clear();
  return c;
}

QubitRange Circuit::reg(const std::string& name) const {
  auto it = registers_.find(name);
  if (it == registers_.end()) throw RegisterMismatch("no register named " + name);
  return it->second;
}

std::vector<uint32_t> Circuit::ancilla_indices() const {
  std::vector<uint32_t> out;
  for (uint32_t q = 0; q < qubit_count_; ++q) {
    if (ancilla_[q]) out.push_back(q);
  }
  return out;
}

QubitRange Circuit::add_register(const std::string& name, uint32_t width) {
  if (registers_.count(name)) throw RegisterMismatch("duplicate register " + name);
  QubitRange r{qubit_count_, width};
  qubit_count_ += width;
  ancilla_.resize(qubit_count_, false);
  free_.resize(qubit_count_, false);
  registers_.emplace(name, r);
  return r;
}

QubitRange Circuit::alloc_ancilla(uint32_t width) {
  if (width > 0) {
    uint32_t run = 0;
    for (uint32_t q = 0; q < qubit_count_; ++q) {
      run = free_[q] ? run + 1 : 0;
      if (run == width) {
        QubitRange r{q + 1 - width, width};
        for (uint32_t i = 0; i < width; ++i) free_[r.offset + i] = false;
        return r;
      }
    }
  }
  QubitRange r{qubit_count_, width};
  qubit_count_ += width;
  ancilla_.resize(qubit_count_, true);
  free_.resize(qubit_count_, false);
  return r;
}

void Circuit::free_ancilla(const QubitRange& r) {
  for (uint32_t i = 0; i < r.width; ++i) {
    uint32_t q = r.offset + i;
    if (!ancilla_[q]) throw Error("free_ancilla on a data qubit");
    if (free_[q]) throw Error("double free of ancilla qubit");
    free_[q] = true;
  }
}

void Circuit::check_qubit(uint32_t q) const {
  if (q >= qubit_count_) {
    throw WidthMismatch("gate references qubit " + std::to_string(q) +
                        " beyond circuit width " + std::to_string(qubit_count_));
  }
}

void Circuit::append_raw(const Gate& g) {
  for (uint32_t q : g.controls) check_qubit(q);
  for (uint32_t q : g.targets) check_qubit(q);
  gates_.push_back(g);
}

void Circuit::append(const Gate& g) {
  if (control_stack_.empty()) {
    append_raw(g);
    return;
  }
  // SWAP cannot carry controls; rewrite before applying the context.
  if (g.kind == GateKind::Swap) {
    append(Gate::cx(g.targets[0], g.targets[1], g.tag));
    append(Gate::cx(g.targets[1], g.targets[0], g.tag));
    append(Gate::cx(g.targets[0], g.targets[1], g.tag));
    return;
  }
  Gate out = g;
  for (const auto& frame : control_stack_) {
    if (frame.mode == ControlMode::BuggyConstSkip &&
        g.tag == OriginTag::ConstLoad) {
      continue;  // the modelled bug: constant loads escape the context
    }
    out = out.with_control(frame.qubit);
  }
  append_raw(out);
}

void Circuit::append_inverse_range(size_t begin, size_t end) {
  for (size_t i = end; i > begin; --i) append_raw(gates_[i - 1]);
}

void Circuit::append_uncompute_range(size_t begin, size_t end) {
  for (size_t i = end; i > begin; --i) {
    Gate g = gates_[i - 1];
    if (g.tag == OriginTag::ConstLoad) g.tag = OriginTag::Uncompute;
    append_raw(g);
  }
}

void Circuit::reverse_range(size_t mark) {
  std::reverse(gates_.begin() + static_cast<std::ptrdiff_t>(mark), gates_.end());
}

void Circuit::push_control(uint32_t q, ControlMode mode) {
  check_qubit(q);
  control_stack_.push_back({q, mode});
}

void Circuit::pop_control() {
  if (control_stack_.empty()) throw Error("pop_control with empty context");
  control_stack_.pop_back();
}

uint64_t BasisState::read(const Wires& w) const {
  uint64_t v = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (get(w[i])) v |= uint64_t{1} << i;
  }
  return v;
}

void BasisState::write(const Wires& w, uint64_t value) {
  for (size_t i = 0; i < w.size(); ++i) set(w[i], (value >> i) & 1);
}

std::string BasisState::str() const {
  std::string s(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? '1' : '0';
  return s;
}

BasisState simulate_range(const Circuit& c, const BasisState& input,
                          size_t begin, size_t end) {
  if (input.size() != c.qubit_count()) {
    throw WidthMismatch("state width " + std::to_string(input.size()) +
                        " != circuit width " + std::to_string(c.qubit_count()));
  }
  if (end > c.gates().size() || begin > end) throw Error("bad simulate range");
  BasisState s = input;
  for (size_t i = begin; i < end; ++i) {
    const Gate& g = c.gates()[i];
    if (g.kind == GateKind::Swap) {
      bool t0 = s.get(g.targets[0]);
      bool t1 = s.get(g.targets[1]);
      s.set(g.targets[0], t1);
      s.set(g.targets[1], t0);
      continue;
    }
    bool fire = true;
    for (uint32_t q : g.controls) fire = fire && s.get(q);
    if (fire) s.flip(g.targets[0]);
  }
  return s;
}

BasisState simulate(const Circuit& c, const BasisState& input) {
  return simulate_range(c, input, 0, c.gates().size());
}

Circuit inverse(const Circuit& c) {
  Circuit out = c.shape_clone();
  const auto& gs = c.gates();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) out.append(*it);
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.qubit_count() != b.qubit_count() || a.registers() != b.registers()) {
    throw RegisterMismatch("compose requires identical register tables");
  }
  Circuit out = a;
  for (const Gate& g : b.gates()) out.append(g);
  return out;
}

Circuit add_control(const Circuit& c, ControlMode mode) {
  Circuit out = c.shape_clone();
  QubitRange ctrl = out.add_register(kControlRegisterName, 1);
  out.push_control(ctrl.offset, mode);
  for (const Gate& g : c.gates()) out.append(g);
  out.pop_control();
  return out;
}

Circuit decompose_for_accounting(const Circuit& c) {
  uint32_t max_controls = 0;
  for (const Gate& g : c.gates()) {
    max_controls = std::max<uint32_t>(max_controls, g.controls.size());
  }
  Circuit out = c.shape_clone();
  QubitRange scratch{0, 0};
  if (max_controls > 2) {
    std::string name = "mcx_scratch";
    while (out.registers().count(name)) name += "_";
    scratch = out.add_register(name, max_controls - 2);
  }
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Swap:
        out.append(Gate::cx(g.targets[0], g.targets[1], g.tag));
        out.append(Gate::cx(g.targets[1], g.targets[0], g.tag));
        out.append(Gate::cx(g.targets[0], g.targets[1], g.tag));
        break;
      case GateKind::MCX: {
        // AND-ladder into clean scratch, one CCX onto the target, ladder
        // uncomputed: (2k-3) CCX for k controls.
        const auto& cs = g.controls;
        uint32_t k = static_cast<uint32_t>(cs.size());
        std::vector<Gate> ladder;
        ladder.push_back(Gate::ccx(cs[0], cs[1], scratch[0], OriginTag::ControlGlue));
        for (uint32_t i = 0; i + 3 < k; ++i) {
          ladder.push_back(
              Gate::ccx(cs[i + 2], scratch[i], scratch[i + 1], OriginTag::ControlGlue));
        }
        for (const Gate& lg : ladder) out.append(lg);
        out.append(Gate::ccx(cs[k - 1], scratch[k - 3], g.targets[0], g.tag));
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) out.append(*it);
        break;
      }
      default:
        out.append(g);
    }
  }
  return out;
}

std::string export_qasm(const Circuit& c) {
  Circuit d = decompose_for_accounting(c);
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << d.qubit_count() << "];\n";
  for (const Gate& g : d.gates()) {
    switch (g.kind) {
      case GateKind::X:
        os << "x q[" << g.targets[0] << "];\n";
        break;
      case GateKind::CX:
        os << "cx q[" << g.controls[0] << "],q[" << g.targets[0] << "];\n";
        break;
      case GateKind::CCX:
        os << "ccx q[" << g.controls[0] << "],q[" << g.controls[1] << "],q["
           << g.targets[0] << "];\n";
        break;
      default:
        throw Error("unexpected gate kind after decomposition");
    }
  }
  return os.str();
}

}  // namespace revec
