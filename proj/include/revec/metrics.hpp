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
 * Cost accounting in the usual resource-estimation columns (#qubits, depth,
 * T-count, CX-count), the structural cost bound for multiply-and-add and
 * the full oracle, and the polynomial-scaling study across field sizes.
 *
 * Accounting rules, fixed so every run agrees bit-for-bit:
 *   SWAP            -> 3 CX
 *   MCX, k controls -> (2k-3) CCX via k-2 clean scratch qubits
 *                      (scratch counted in qubit_count)
 *   CCX             -> 7 T + 6 CX (counts only; the simulator always runs
 *                      the undecomposed list)
 *   CX              -> 1 CX;  X -> no T, no CX
 * Depth is greedy as-soon-as-possible layering by qubit-disjointness of the
 * post-decomposition gate list.
 */

#pragma once

#include "revec/oracle.hpp"
#include "revec/report_util.hpp"

namespace revec {

struct CostReport {
  std::string name;
  uint64_t qubits = 0;   // post-decomposition, scratch included
  uint64_t depth = 0;
  uint64_t t_count = 0;
  uint64_t cx_count = 0;
  std::map<std::string, uint64_t> histogram;  // raw gate kinds, undecomposed

  json to_json() const;
};

CostReport cost_report(const Circuit& c, const std::string& name);

/// Aligned text table over the standard columns.
std::string cost_table(const std::vector<CostReport>& rows);

/// Structural bound: per column (T-count, CX-count),
///   cost(MultAdd) <= n * Cost_Add + c * n     and
///   cost(oracle)  <= 2n * Cost_Add + c * n,
/// where Cost_Add is the max cost of a controlled point update over both
/// doubling schedules and c is the smallest integer closing the inequality.
/// Throws BoundViolated when the measured slack exceeds Cost_Add itself
/// (i.e. the per-iteration overhead stops being "constant glue").
struct BoundReport {
  json instance;
  uint64_t cost_add_t = 0;
  uint64_t cost_add_cx = 0;
  uint64_t multadd_t = 0, multadd_cx = 0;
  uint64_t oracle_t = 0, oracle_cx = 0;
  uint64_t slack_multadd_t = 0, slack_multadd_cx = 0;  // minimal c per column
  uint64_t slack_oracle_t = 0, slack_oracle_cx = 0;
  bool holds = false;

  json to_json() const;
  std::string to_text() const;
};

BoundReport check_structural_bound(const CurveParams& params, const AffinePoint& g,
                                   const AffinePoint& p_point, unsigned n);

/// Polynomial-family caps: schoolbook reversible multiplication plus the
/// fixed-round inversion put gate counts at O(m^2)-O(m^3); 4 leaves slack
/// for constant-factor structure. Qubits must stay essentially linear.
inline constexpr double kMaxCostExponent = 4.0;
inline constexpr double kMaxQubitExponent = 1.5;

/// Least-squares exponent of log(cost) against log(m) over a prime family.
struct ScalingFit {
  struct Point {
    uint64_t p = 0;
    unsigned m = 0;
    unsigned n = 0;
    uint64_t qubits = 0, depth = 0, t_count = 0, cx_count = 0;
  };
  std::vector<Point> points;
  double exponent_t = 0, exponent_cx = 0, exponent_qubits = 0;
  double residual_t = 0, residual_cx = 0, residual_qubits = 0;

  json to_json() const;
  std::string to_text() const;
};

/// Builds the oracle for each prime (with a per-prime curve and generator
/// chosen by pick_instance) and fits the cost exponents. Throws
/// FitDegenerate when fewer than two distinct m values are present.
ScalingFit scaling_study(const std::vector<uint64_t>& primes, unsigned n);

/// Default curve and generator used for a prime in studies: coefficients
/// (3,3) where nonsingular ((1,1) for p=13), base point of maximal order.
struct StudyInstance {
  CurveParams params;
  AffinePoint generator;
};
StudyInstance pick_instance(uint64_t prime);

/// Smallest multiple ell*G (ell >= 2) whose width-n doubling schedule is
/// constructible; falls back to G itself. Keeps studies away from points
/// whose doublings hit the identity.
AffinePoint pick_study_point(const CurveParams& params, const AffinePoint& g,
                             unsigned n);

/// Side-by-side costs of the point update and its controlled version.
struct CtrlOverheadReport {
  CostReport base;
  CostReport controlled;
  uint64_t extra_control_qubits = 0;  // pre-decomposition, must be exactly 1
  double t_ratio = 0;
  double cx_ratio = 0;

  json to_json() const;
  std::string to_text() const;
};

CtrlOverheadReport ctrl_overhead(const CurveParams& params, const AffinePoint& g);

}  // namespace revec
