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
 * Scalar multiplication-and-add (k, R) -> (k, R + kQ) over a classically
 * precomputed doubling schedule, and the two-stage discrete-log oracle
 * |x1>|x2>|R> -> |x1>|x2>|R + x1 G + x2 P>.
 */

#pragma once

#include "revec/point_gadget.hpp"

namespace revec {

/// Appends n point updates AddInpl_{2^i Q}, each conditioned on scalar bit
/// k[i] under the given control mode. Gate-index marks after each iteration
/// are pushed to *iteration_marks when provided (for invariant snapshots).
void mult_add(Circuit& c, const Wires& k_bits, const PointRegisters& acc,
              const AffinePoint& q, unsigned n, const CurveParams& params,
              ControlMode mode, std::vector<size_t>* iteration_marks = nullptr);

/// Standalone multiply-and-add circuit with registers k, acc_x, acc_y.
struct MultAddBuild {
  Circuit circuit;
  DoublingSchedule schedule;
  std::vector<size_t> iteration_marks;
};

MultAddBuild build_mult_add(const CurveParams& params, const AffinePoint& g,
                            unsigned n, ControlMode mode);

/// The full oracle: registers x1, x2, acc_x, acc_y; stage order G then P.
struct OracleBuild {
  Circuit circuit;
  DoublingSchedule schedule_g;
  DoublingSchedule schedule_p;
  std::vector<size_t> marks_g;  // per-iteration gate marks, stage 1
  std::vector<size_t> marks_p;  // per-iteration gate marks, stage 2
};

OracleBuild build_oracle(const CurveParams& params, const AffinePoint& g,
                         const AffinePoint& p_point, unsigned n,
                         ControlMode mode);

}  // namespace revec
