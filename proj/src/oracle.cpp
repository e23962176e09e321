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

#include "revec/oracle.hpp"

namespace revec {

void mult_add(Circuit& c, const Wires& k_bits, const PointRegisters& acc,
              const AffinePoint& q, unsigned n, const CurveParams& params,
              ControlMode mode, std::vector<size_t>* iteration_marks) {
  if (k_bits.size() < n) throw WidthMismatch("mult_add: scalar register too narrow");
  DoublingSchedule sched = doubles_schedule(q, n, params);
  for (unsigned i = 0; i < n; ++i) {
    c.push_control(k_bits[i], mode);
    add_inpl_const(c, acc, sched.entries[i], params);
    c.pop_control();
    if (iteration_marks) iteration_marks->push_back(c.size());
  }
}

MultAddBuild build_mult_add(const CurveParams& params, const AffinePoint& g,
                            unsigned n, ControlMode mode) {
  const unsigned m = params.bits();
  MultAddBuild out;
  out.schedule = doubles_schedule(g, n, params);
  out.circuit = Circuit::with_registers({{"k", n}, {"acc_x", m}, {"acc_y", m}});
  PointRegisters acc = acc_registers(out.circuit, params);
  mult_add(out.circuit, wires_of(out.circuit.reg("k")), acc, g, n, params, mode,
           &out.iteration_marks);
  return out;
}

OracleBuild build_oracle(const CurveParams& params, const AffinePoint& g,
                         const AffinePoint& p_point, unsigned n,
                         ControlMode mode) {
  const unsigned m = params.bits();
  OracleBuild out;
  out.schedule_g = doubles_schedule(g, n, params);
  out.schedule_p = doubles_schedule(p_point, n, params);
  out.circuit = Circuit::with_registers(
      {{"x1", n}, {"x2", n}, {"acc_x", m}, {"acc_y", m}});
  PointRegisters acc = acc_registers(out.circuit, params);
  mult_add(out.circuit, wires_of(out.circuit.reg("x1")), acc, g, n, params,
           mode, &out.marks_g);
  mult_add(out.circuit, wires_of(out.circuit.reg("x2")), acc, p_point, n,
           params, mode, &out.marks_p);
  return out;
}

}  // namespace revec
