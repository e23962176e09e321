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
 * The in-place point-update gadget: |R> -> |R + G> on a two-coordinate
 * accumulator, for a fixed classical point G, plus the classically computed
 * doubling schedule used by scalar multiplication.
 *
 * Realisation: an out-of-place chord addition of +G is accumulated into
 * fresh registers with full uncompute, the old accumulator is cleared by
 * accumulating the chord addition of -G applied to the result, and the two
 * register pairs are swapped. The chord formula for subtracting G is
 * singular at exactly one in-contract point (accumulator output -G, i.e.
 * input R = -2G); a two-coordinate compare-and-correct patch maps that
 * input to the right output, so the gadget matches the classical group law
 * on every input passing wf_affine_add and returns every ancilla to |0>.
 */

#pragma once

#include "revec/circuit.hpp"
#include "revec/ec_ref.hpp"
#include "revec/rev_arith.hpp"

namespace revec {

/// The accumulator register pair encoding a point; (0,0) encodes the
/// identity and is off-contract for the gadget.
struct PointRegisters {
  ModRegister x;
  ModRegister y;
};

/// [G, 2G, 4G, ..., 2^(n-1) G], generated classically.
struct DoublingSchedule {
  std::vector<AffinePoint> entries;
  AffinePoint base;
  unsigned width = 0;
};

/// Computes entry i = 2^i G via the classical reference. Throws
/// ScheduleHitsIdentity if any required entry is the identity (the
/// constant-point gadget cannot add O).
DoublingSchedule doubles_schedule(const AffinePoint& g, unsigned n,
                                  const CurveParams& params);

/// Appends the in-place update |R> -> |R + G| to the accumulator, honest on
/// all accumulator values with wf_affine_add(R, G); all scratch is returned
/// to |0>. Throws AddIdentityUnsupported for G = O.
void add_inpl_const(Circuit& c, const PointRegisters& acc,
                    const AffinePoint& g, const CurveParams& params);

/// Standalone gadget circuit with registers acc_x, acc_y.
Circuit build_add_inpl(const CurveParams& params, const AffinePoint& g);

/// Accumulator registers of a circuit built with acc_x/acc_y.
PointRegisters acc_registers(const Circuit& c, const CurveParams& params);

/// Writes an encoded point into the accumulator bits of a state.
void write_point(BasisState& s, const PointRegisters& acc, const AffinePoint& pt);

/// Reads the accumulator bits of a state back as a point encoding.
EncodedPoint read_point(const BasisState& s, const PointRegisters& acc);

}  // namespace revec
