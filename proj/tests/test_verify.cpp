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

#include "revec/verify.hpp"

using namespace revec;

namespace {

const CurveParams kCase(5, 3, 3);
const AffinePoint kG = AffinePoint::xy(3, 2);

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("check_addinpl reproduces the case-study filter and witness") {
  VerificationReport rep = check_addinpl(kCase, kG);
  CHECK(rep.pass());
  CHECK(rep.in_contract_pass == 1);  // the single candidate (4,3)
  CHECK(rep.in_contract_fail == 0);
  CHECK(rep.off_contract_observed == 4);  // O and the three screened points
}

TEST_CASE("check_addinpl passes every WF point on p=7") {
  CurveParams p7(7, 3, 3);
  for (const AffinePoint& g : enumerate_group(p7)) {
    if (g.is_identity) continue;
    VerificationReport rep = check_addinpl(p7, g);
    CHECK(rep.pass());
    CHECK(rep.in_contract_fail == 0);
  }
}

TEST_CASE("mutation test: a deleted gate is detected") {
  Circuit gadget = build_add_inpl(kCase, kG);
  // Drop one mid-circuit gate; rebuild the gate list without it.
  Circuit mutant = gadget.shape_clone();
  size_t victim = gadget.gates().size() / 2;
  for (size_t i = 0; i < gadget.gates().size(); ++i) {
    if (i == victim) continue;
    mutant.append(gadget.gates()[i]);
  }
  VerificationReport rep = check_addinpl_circuit(kCase, kG, mutant);
  CHECK_FALSE(rep.pass());
  CHECK(rep.counterexamples.size() >= 1);
}

TEST_CASE("control law passes under ControlAll on p=5 and p=7") {
  for (auto [p, a, b] : {std::tuple<uint64_t, uint64_t, uint64_t>{5, 3, 3},
                         {7, 3, 3}}) {
    CurveParams params(p, a, b);
    for (const AffinePoint& g : enumerate_group(params)) {
      if (g.is_identity) continue;
      Circuit gadget = build_add_inpl(params, g);
      ControlLawStates states = control_states_for_gadget(gadget, params, g, 1);
      VerificationReport rep =
          check_control_law(gadget, ControlMode::ControlAll, states);
      CHECK(rep.pass());
      CHECK(rep.detail.at("structural_identity").get<bool>());
    }
  }
}

TEST_CASE("BuggyConstSkip yields a c=0 counterexample on the gadget") {
  Circuit gadget = build_add_inpl(kCase, kG);
  ControlLawStates states = control_states_for_gadget(gadget, kCase, kG, 1);
  VerificationReport rep =
      check_control_law(gadget, ControlMode::BuggyConstSkip, states);
  CHECK_FALSE(rep.pass());
  REQUIRE(rep.counterexamples.size() >= 1);
  CHECK(rep.counterexamples[0].at("branch") == "c=0");
  // c=1 still agrees with the uncontrolled gadget: every failure is on c=0.
  for (const auto& ce : rep.counterexamples) CHECK(ce.at("branch") == "c=0");
}

TEST_CASE("buggy detection works for plain arithmetic gadgets too") {
  // Any gadget with a CONST_LOAD gate must trip the c=0 check.
  const uint64_t p = 5;
  Circuit c = Circuit::with_registers({{"x", 3}});
  add_const_mod(c, ModRegister(c.reg("x"), p), 3);
  ControlLawStates states;
  states.seed = 9;
  for (uint64_t v = 0; v < p; ++v) {
    BasisState s(c.qubit_count());
    s.write(c.reg("x"), v);
    states.identity_states.push_back(s);
    states.agree_states.push_back(s);
  }
  VerificationReport all = check_control_law(c, ControlMode::ControlAll, states);
  CHECK(all.pass());
  VerificationReport buggy =
      check_control_law(c, ControlMode::BuggyConstSkip, states);
  CHECK_FALSE(buggy.pass());
}

TEST_CASE("counterexamples replay bit-for-bit") {
  Circuit gadget = build_add_inpl(kCase, kG);
  ControlLawStates states = control_states_for_gadget(gadget, kCase, kG, 1);
  VerificationReport rep =
      check_control_law(gadget, ControlMode::BuggyConstSkip, states);
  REQUIRE_FALSE(rep.counterexamples.empty());
  Circuit controlled = add_control(gadget, ControlMode::BuggyConstSkip);
  for (const auto& ce : rep.counterexamples) {
    std::string in_bits = ce.at("input_bits").get<std::string>();
    BasisState in(controlled.qubit_count());
    REQUIRE(in_bits.size() == controlled.qubit_count());
    for (uint32_t q = 0; q < in.size(); ++q) in.set(q, in_bits[q] == '1');
    CHECK(simulate(controlled, in).str() == ce.at("output_bits").get<std::string>());
  }
}

TEST_CASE("check_multadd judges WF chains and observes the rest") {
  VerificationReport rep = check_multadd(kCase, kG, 2);
  CHECK(rep.pass());
  CHECK(rep.in_contract_pass > 0);
  CHECK(rep.off_contract_observed > 0);
  // (k=3, R=(4,3)) adds inverse points at step 2, hence off contract.
  CHECK_FALSE(wf_chain(Scalar(3, 2), AffinePoint::xy(4, 3),
                       doubles_schedule(kG, 2, kCase).entries, kCase));
}

TEST_CASE("check_oracle passes with the ell substitution cross-check") {
  AffinePoint p_point = scalar_mul(2, kG, kCase);
  VerificationReport rep = check_oracle(kCase, kG, p_point, 1, 2);
  CHECK(rep.pass());
  CHECK(rep.in_contract_pass > 0);
  CHECK(rep.detail.at("ell_substitution_checked").get<uint64_t>() ==
        rep.in_contract_pass);
}

TEST_CASE("sanity_cx returns the deterministic histograms") {
  SanityCxResult res = sanity_cx(256);
  CHECK(res.pass);
  REQUIRE(res.histogram.size() == 1);
  CHECK(res.histogram.at("00") == 256);

  SanityCxResult one = sanity_cx(1);
  CHECK(one.histogram.at("00") == 1);

  SanityCxResult on = sanity_cx(16, true);
  CHECK(on.pass);
  CHECK(on.histogram.at("11") == 16);

  CHECK_THROWS_AS(sanity_cx(0), Error);
}

TEST_CASE("demo_bug juxtaposes the passing sanity and the failing gadget") {
  BugDemoReport rep = demo_bug(kCase, kG, 1);
  CHECK(rep.sanity.pass);
  CHECK(rep.control_all.pass());
  CHECK_FALSE(rep.buggy.pass());
  CHECK(rep.demonstrates_bug());
  REQUIRE_FALSE(rep.buggy.counterexamples.empty());
  const auto& ce = rep.buggy.counterexamples[0];
  // The counterexample names the control value and the accumulator in/out.
  CHECK(ce.at("branch") == "c=0");
  CHECK(ce.at("registers").contains("acc_x"));
  CHECK(ce.at("registers").contains("acc_y"));
  json j = rep.to_json();
  CHECK(j.at("verdict") == "fail");
  CHECK(j.at("sanity_cx").at("histogram").at("00") == 256);
}

TEST_CASE("checkers are deterministic for a fixed seed") {
  Circuit gadget = build_add_inpl(kCase, kG);
  ControlLawStates states = control_states_for_gadget(gadget, kCase, kG, 7);
  std::string a =
      check_control_law(gadget, ControlMode::ControlAll, states).to_json().dump();
  std::string b =
      check_control_law(gadget, ControlMode::ControlAll, states).to_json().dump();
  CHECK(a == b);
}

}  // TEST_SUITE
