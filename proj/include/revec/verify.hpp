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
 * Semantic checkers. Every checker enumerates basis states, simulates, and
 * judges only in-contract inputs; off-contract inputs are recorded as
 * observations. Checkers are pure functions of their parameters and seed,
 * and their JSON reports are byte-reproducible.
 */

#pragma once

#include "revec/oracle.hpp"
#include "revec/report_util.hpp"

namespace revec {

/// Outcome of one semantic check. `pass` is true iff no in-contract input
/// failed (value mismatch or ancilla residue both count as failures).
struct VerificationReport {
  std::string check;
  json params = json::object();
  uint64_t in_contract_pass = 0;
  uint64_t in_contract_fail = 0;
  uint64_t off_contract_observed = 0;
  json counterexamples = json::array();  // first failures, capped
  bool truncated = false;                // counterexample list was capped
  json detail = json::object();          // check-specific extras

  bool pass() const { return in_contract_fail == 0; }
  std::string verdict() const { return pass() ? "pass" : "fail"; }

  json to_json() const;
  std::string to_text() const;
};

inline constexpr size_t kMaxCounterexamples = 8;

/// Point-update exhaustion: every accumulator point passing the WF screen
/// must map to the classical sum with all ancillas restored.
VerificationReport check_addinpl(const CurveParams& params, const AffinePoint& g);

/// Same sweep against a caller-supplied gadget circuit (used by the
/// checker's own mutation tests).
VerificationReport check_addinpl_circuit(const CurveParams& params,
                                         const AffinePoint& g,
                                         const Circuit& gadget);

/// State sets for the control-law check of a gadget circuit.
struct ControlLawStates {
  std::vector<BasisState> identity_states;  // c=0 must act as identity here
  std::vector<BasisState> agree_states;     // c=1 must match the uncontrolled gadget
  unsigned random_states = 100;             // extra full-width states for c=0
  uint64_t seed = 1;
  json instance = json::object();           // instance parameters for the report
};

/// Standard state sets for an accumulator gadget: all encoded curve points
/// with ancillas 0 for the identity branch, WF points for the agreement
/// branch.
ControlLawStates control_states_for_gadget(const Circuit& gadget,
                                           const CurveParams& params,
                                           const AffinePoint& g,
                                           uint64_t seed);

/// The control law: c=0 acts as the identity (checked structurally for
/// ControlAll, and by simulation on the identity states plus seeded random
/// full-width states), and c=1 agrees with the uncontrolled gadget.
VerificationReport check_control_law(const Circuit& gadget, ControlMode mode,
                                     const ControlLawStates& states);

/// Multiply-and-add refinement: for every (k, R) with wf_chain true, the
/// accumulator becomes R + kG and the per-iteration snapshots match the
/// classical replay.
VerificationReport check_multadd(const CurveParams& params, const AffinePoint& g,
                                 unsigned n);

/// Oracle refinement: for wf_chain-valid (x1, x2, R), the accumulator
/// becomes R + x1 G + x2 P, scalar registers are untouched and ancillas
/// are 0. When ell is supplied (P = ell G), the classical substitution
/// (x1 + ell x2) G + R is cross-checked as well.
VerificationReport check_oracle(const CurveParams& params, const AffinePoint& g,
                                const AffinePoint& p_point, unsigned n,
                                std::optional<uint64_t> ell = std::nullopt);

/// Deterministic measurement histogram of the controlled-X sanity circuit.
struct SanityCxResult {
  unsigned shots = 0;
  bool control_on = false;
  std::map<std::string, unsigned> histogram;
  bool pass = false;
  json to_json() const;
};

SanityCxResult sanity_cx(unsigned shots, bool control_on = false);

/// The bug demonstration: the gadget-level control law fails under
/// BuggyConstSkip while the trivial controlled-X sanity check passes,
/// in one narrative report. Its verdict is "fail" by design.
struct BugDemoReport {
  json params;
  SanityCxResult sanity;
  VerificationReport control_all;
  VerificationReport buggy;
  bool demonstrates_bug() const {
    return sanity.pass && control_all.pass() && !buggy.pass();
  }
  json to_json() const;
  std::string to_text() const;
};

BugDemoReport demo_bug(const CurveParams& params, const AffinePoint& g,
                       uint64_t seed);

}  // namespace revec
