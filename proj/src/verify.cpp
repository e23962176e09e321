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

#include "revec/verify.hpp"

#include <sstream>

#include "revec/prng.hpp"

namespace revec {

namespace {

std::vector<uint32_t> residue_indices(const Circuit& c, const BasisState& s) {
  std::vector<uint32_t> out;
  for (uint32_t q : c.ancilla_indices()) {
    if (s.get(q)) out.push_back(q);
  }
  return out;
}

json registers_view(const Circuit& c, const BasisState& in, const BasisState& out) {
  json j = json::object();
  for (const auto& [name, range] : c.registers()) {
    j[name] = {{"in", in.read(range)}, {"out", out.read(range)}};
  }
  return j;
}

void add_counterexample(VerificationReport& rep, json ce) {
  if (rep.counterexamples.size() >= kMaxCounterexamples) {
    rep.truncated = true;
    return;
  }
  rep.counterexamples.push_back(std::move(ce));
}

json observed_entry(const AffinePoint& in, const EncodedPoint& out, bool clean) {
  return json{{"acc_in", in.str()},
              {"acc_out", {out.x, out.y}},
              {"ancillas_clean", clean}};
}

}  // namespace

json VerificationReport::to_json() const {
  json j;
  j["check"] = check;
  j["params"] = params;
  j["counts"] = {{"in_contract_pass", in_contract_pass},
                 {"in_contract_fail", in_contract_fail},
                 {"off_contract_observed", off_contract_observed}};
  j["counterexamples"] = counterexamples;
  if (truncated) j["counterexamples_truncated"] = true;
  if (!detail.empty()) j["detail"] = detail;
  j["verdict"] = verdict();
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "check " << check << "\n";
  os << "  params " << params.dump() << "\n";
  os << "  in-contract pass " << in_contract_pass << ", fail " << in_contract_fail
     << ", off-contract observed " << off_contract_observed << "\n";
  for (const auto& ce : counterexamples) {
    os << "  counterexample " << ce.dump() << "\n";
  }
  if (truncated) os << "  (counterexample list truncated)\n";
  os << "  verdict " << verdict() << "\n";
  return os.str();
}

VerificationReport check_addinpl_circuit(const CurveParams& params,
                                         const AffinePoint& g,
                                         const Circuit& gadget) {
  VerificationReport rep;
  rep.check = "addinpl";
  rep.params = params_json(params);
  rep.params["G"] = point_json(g);

  PointRegisters acc = acc_registers(gadget, params);
  json observed = json::array();
  json candidates = json::array();

  for (const AffinePoint& r : enumerate_group(params)) {
    if (wf_affine_add(r, g, params)) candidates.push_back(point_json(r));
  }
  rep.detail["wf_candidates"] = candidates;

  for (const AffinePoint& r : enumerate_group(params)) {
    BasisState in(gadget.qubit_count());
    write_point(in, acc, r);
    BasisState out = simulate(gadget, in);
    EncodedPoint got = read_point(out, acc);
    auto residue = residue_indices(gadget, out);

    if (!wf_affine_add(r, g, params)) {
      ++rep.off_contract_observed;
      observed.push_back(observed_entry(r, got, residue.empty()));
      continue;
    }
    EncodedPoint expected = encode_point(ec_add(r, g, params));
    if (got == expected && residue.empty()) {
      ++rep.in_contract_pass;
    } else {
      ++rep.in_contract_fail;
      BasisState want(gadget.qubit_count());
      write_point(want, acc, ec_add(r, g, params));
      add_counterexample(rep, json{{"acc_in", point_json(r)},
                                   {"acc_expected", {expected.x, expected.y}},
                                   {"acc_got", {got.x, got.y}},
                                   {"ancilla_residue", residue},
                                   {"input_bits", in.str()},
                                   {"output_bits", out.str()},
                                   {"expected_bits", want.str()}});
    }
  }
  rep.detail["off_contract_observations"] = observed;
  return rep;
}

VerificationReport check_addinpl(const CurveParams& params, const AffinePoint& g) {
  return check_addinpl_circuit(params, g, build_add_inpl(params, g));
}

ControlLawStates control_states_for_gadget(const Circuit& gadget,
                                           const CurveParams& params,
                                           const AffinePoint& g,
                                           uint64_t seed) {
  ControlLawStates states;
  states.seed = seed;
  states.instance = params_json(params);
  states.instance["G"] = point_json(g);
  PointRegisters acc = acc_registers(gadget, params);
  for (const AffinePoint& r : enumerate_group(params)) {
    BasisState s(gadget.qubit_count());
    write_point(s, acc, r);
    states.identity_states.push_back(s);
    if (wf_affine_add(r, g, params)) states.agree_states.push_back(s);
  }
  return states;
}

VerificationReport check_control_law(const Circuit& gadget, ControlMode mode,
                                     const ControlLawStates& states) {
  VerificationReport rep;
  rep.check = "control_law";
  rep.params = states.instance;
  rep.params["mode"] = to_string(mode);
  rep.params["seed"] = states.seed;
  rep.params["random_states"] = states.random_states;

  Circuit controlled = add_control(gadget, mode);
  const uint32_t ctrl = controlled.reg(kControlRegisterName).offset;
  const uint32_t n = gadget.qubit_count();

  if (mode == ControlMode::ControlAll) {
    bool structural = true;
    for (const Gate& gate : controlled.gates()) {
      bool found = false;
      for (uint32_t q : gate.controls) found = found || q == ctrl;
      structural = structural && found;
    }
    rep.detail["structural_identity"] = structural;
    if (!structural) ++rep.in_contract_fail;
  }

  auto lift = [&](const BasisState& s, bool c) {
    BasisState t(n + 1);
    for (uint32_t q = 0; q < n; ++q) t.set(q, s.get(q));
    t.set(ctrl, c);
    return t;
  };

  auto check_identity = [&](const BasisState& base, const std::string& origin) {
    BasisState in = lift(base, false);
    BasisState out = simulate(controlled, in);
    if (out == in) {
      ++rep.in_contract_pass;
    } else {
      ++rep.in_contract_fail;
      add_counterexample(rep, json{{"branch", "c=0"},
                                   {"origin", origin},
                                   {"registers", registers_view(controlled, in, out)},
                                   {"input_bits", in.str()},
                                   {"output_bits", out.str()},
                                   {"expected_bits", in.str()}});
    }
  };

  for (const BasisState& s : states.identity_states) check_identity(s, "encoded_point");

  SplitMix64 rng(states.seed);
  for (unsigned i = 0; i < states.random_states; ++i) {
    BasisState s(n);
    for (uint32_t q = 0; q < n; ++q) s.set(q, rng.next_bit());
    check_identity(s, "random");
  }

  for (const BasisState& s : states.agree_states) {
    BasisState in = lift(s, true);
    BasisState out = simulate(controlled, in);
    BasisState plain = simulate(gadget, s);
    BasisState want = lift(plain, true);
    if (out == want) {
      ++rep.in_contract_pass;
    } else {
      ++rep.in_contract_fail;
      add_counterexample(rep, json{{"branch", "c=1"},
                                   {"registers", registers_view(controlled, in, out)},
                                   {"input_bits", in.str()},
                                   {"output_bits", out.str()},
                                   {"expected_bits", want.str()}});
    }
  }
  return rep;
}

VerificationReport check_multadd(const CurveParams& params, const AffinePoint& g,
                                 unsigned n) {
  VerificationReport rep;
  rep.check = "multadd";
  rep.params = params_json(params);
  rep.params["G"] = point_json(g);
  rep.params["n"] = n;

  MultAddBuild build = build_mult_add(params, g, n, ControlMode::ControlAll);
  const Circuit& c = build.circuit;
  PointRegisters acc = acc_registers(c, params);
  QubitRange k_reg = c.reg("k");
  json observed = json::array();

  for (uint64_t k = 0; k < (uint64_t{1} << n); ++k) {
    Scalar scalar(k, n);
    for (const AffinePoint& r : enumerate_group(params)) {
      BasisState state(c.qubit_count());
      state.write(k_reg, k);
      write_point(state, acc, r);

      if (!wf_chain(scalar, r, build.schedule.entries, params)) {
        BasisState out = simulate(c, state);
        ++rep.off_contract_observed;
        observed.push_back(json{{"k", k},
                                {"acc_in", r.str()},
                                {"acc_out", {read_point(out, acc).x, read_point(out, acc).y}},
                                {"ancillas_clean", residue_indices(c, out).empty()}});
        continue;
      }

      // Step through the iterations, holding the circuit to the classical
      // loop invariant acc_i = R + sum_{j<i} k_j 2^j G.
      AffinePoint classical = r;
      BasisState cursor = state;
      size_t prev = 0;
      bool ok = true;
      json fail;
      for (unsigned i = 0; i < n && ok; ++i) {
        cursor = simulate_range(c, cursor, prev, build.iteration_marks[i]);
        prev = build.iteration_marks[i];
        if (scalar.bit(i)) classical = ec_add(classical, build.schedule.entries[i], params);
        EncodedPoint got = read_point(cursor, acc);
        EncodedPoint want = encode_point(classical);
        auto residue = residue_indices(c, cursor);
        if (got != want || !residue.empty() || cursor.read(k_reg) != k) {
          ok = false;
          fail = json{{"k", k},
                      {"acc_in", point_json(r)},
                      {"iteration", i},
                      {"acc_expected", {want.x, want.y}},
                      {"acc_got", {got.x, got.y}},
                      {"k_reg_out", cursor.read(k_reg)},
                      {"ancilla_residue", residue},
                      {"input_bits", state.str()},
                      {"output_bits", cursor.str()}};
        }
      }
      if (ok) {
        ++rep.in_contract_pass;
      } else {
        ++rep.in_contract_fail;
        add_counterexample(rep, std::move(fail));
      }
    }
  }
  rep.detail["off_contract_observations"] = observed;
  return rep;
}

VerificationReport check_oracle(const CurveParams& params, const AffinePoint& g,
                                const AffinePoint& p_point, unsigned n,
                                std::optional<uint64_t> ell) {
  VerificationReport rep;
  rep.check = "oracle";
  rep.params = params_json(params);
  rep.params["G"] = point_json(g);
  rep.params["P"] = point_json(p_point);
  rep.params["n"] = n;
  if (ell) rep.params["ell"] = *ell;

  OracleBuild build = build_oracle(params, g, p_point, n, ControlMode::ControlAll);
  const Circuit& c = build.circuit;
  PointRegisters acc = acc_registers(c, params);
  QubitRange x1_reg = c.reg("x1");
  QubitRange x2_reg = c.reg("x2");
  uint64_t substitution_checked = 0;
  // Sign convention surfaced for downstream consumers: both stages add.
  rep.detail["convention"] = "R +x1*G +x2*P, stage order G then P";

  for (uint64_t x1 = 0; x1 < (uint64_t{1} << n); ++x1) {
    for (uint64_t x2 = 0; x2 < (uint64_t{1} << n); ++x2) {
      for (const AffinePoint& r : enumerate_group(params)) {
        AffinePoint mid = ec_add(r, scalar_mul(x1, g, params), params);
        bool wf = wf_chain(Scalar(x1, n), r, build.schedule_g.entries, params) &&
                  wf_chain(Scalar(x2, n), mid, build.schedule_p.entries, params);

        BasisState in(c.qubit_count());
        in.write(x1_reg, x1);
        in.write(x2_reg, x2);
        write_point(in, acc, r);
        if (!wf) {
          ++rep.off_contract_observed;
          continue;
        }
        BasisState out = simulate(c, in);
        AffinePoint expected = ec_add(mid, scalar_mul(x2, p_point, params), params);
        EncodedPoint got = read_point(out, acc);
        EncodedPoint want = encode_point(expected);
        auto residue = residue_indices(c, out);
        bool scalars_intact = out.read(x1_reg) == x1 && out.read(x2_reg) == x2;

        bool substitution_ok = true;
        if (ell) {
          AffinePoint via_ell =
              ec_add(r, scalar_mul(x1 + *ell * x2, g, params), params);
          substitution_ok = via_ell == expected;
          if (substitution_ok) ++substitution_checked;
        }

        if (got == want && residue.empty() && scalars_intact && substitution_ok) {
          ++rep.in_contract_pass;
        } else {
          ++rep.in_contract_fail;
          add_counterexample(rep,
                             json{{"x1", x1},
                                  {"x2", x2},
                                  {"acc_in", point_json(r)},
                                  {"acc_expected", {want.x, want.y}},
                                  {"acc_got", {got.x, got.y}},
                                  {"scalars_intact", scalars_intact},
                                  {"ell_substitution_ok", substitution_ok},
                                  {"ancilla_residue", residue},
                                  {"input_bits", in.str()},
                                  {"output_bits", out.str()}});
        }
      }
    }
  }
  if (ell) rep.detail["ell_substitution_checked"] = substitution_checked;
  return rep;
}

json SanityCxResult::to_json() const {
  json h = json::object();
  for (const auto& [key, count] : histogram) h[key] = count;
  return json{{"check", "sanity_cx"},
              {"shots", shots},
              {"control", control_on ? 1 : 0},
              {"histogram", h},
              {"verdict", pass ? "pass" : "fail"}};
}

SanityCxResult sanity_cx(unsigned shots, bool control_on) {
  if (shots < 1) throw Error("sanity_cx: shots must be >= 1");
  Circuit c = Circuit::with_registers({{"target", 1}, {"control", 1}});
  c.append(Gate::cx(c.reg("control").offset, c.reg("target").offset));

  SanityCxResult result;
  result.shots = shots;
  result.control_on = control_on;
  for (unsigned i = 0; i < shots; ++i) {
    BasisState s(c.qubit_count());
    s.set(c.reg("control").offset, control_on);
    BasisState out = simulate(c, s);
    result.histogram[out.str()] += 1;
  }
  const std::string expect = control_on ? "11" : "00";
  result.pass = result.histogram.size() == 1 &&
                result.histogram.count(expect) == 1 &&
                result.histogram.at(expect) == shots;
  return result;
}

json BugDemoReport::to_json() const {
  return json{{"check", "demo_bug"},
              {"params", params},
              {"sanity_cx", sanity.to_json()},
              {"control_all", control_all.to_json()},
              {"buggy_const_skip", buggy.to_json()},
              {"bug_demonstrated", demonstrates_bug()},
              {"verdict", demonstrates_bug() ? "fail" : "inconclusive"}};
}

std::string BugDemoReport::to_text() const {
  std::ostringstream os;
  os << "demo_bug " << params.dump() << "\n";
  os << "  The trivial controlled-X sanity run is deterministic: ";
  for (const auto& [key, count] : sanity.histogram) {
    os << "{" << key << ": " << count << "}";
  }
  os << " -> " << (sanity.pass ? "pass" : "fail") << "\n";
  os << "  Under the faithful control law (mode=all) the gadget's controlled\n"
     << "  invocation passes both branches: " << control_all.verdict() << "\n";
  os << "  Under mode=buggy, constant loads escape the control context and\n"
     << "  c=0 is no longer the identity: " << buggy.verdict() << "\n";
  for (const auto& ce : buggy.counterexamples) {
    os << "  counterexample " << ce.dump() << "\n";
  }
  os << "  verdict " << (demonstrates_bug() ? "fail (bug demonstrated)" : "inconclusive")
     << "\n";
  return os.str();
}

BugDemoReport demo_bug(const CurveParams& params, const AffinePoint& g,
                       uint64_t seed) {
  BugDemoReport rep;
  rep.params = params_json(params);
  rep.params["G"] = point_json(g);
  rep.params["seed"] = seed;

  Circuit gadget = build_add_inpl(params, g);
  ControlLawStates states = control_states_for_gadget(gadget, params, g, seed);
  rep.sanity = sanity_cx(256);
  rep.control_all = check_control_law(gadget, ControlMode::ControlAll, states);
  rep.buggy = check_control_law(gadget, ControlMode::BuggyConstSkip, states);
  return rep;
}

}  // namespace revec
