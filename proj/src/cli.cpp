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

#include "revec/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "revec/metrics.hpp"
#include "revec/verify.hpp"

namespace revec::cli {

namespace {

struct Options {
  uint64_t p = 5, a = 3, b = 3;
  uint64_t gx = 3, gy = 2;
  std::optional<uint64_t> ell;
  std::optional<uint64_t> px, py;
  unsigned n = 1;
  std::string mode = "all";
  uint64_t seed = 1;
  std::string report = "text";
  std::string out;
  std::string config_path;
  unsigned shots = 256;
  std::string primes = "5,11,17,23";
  std::string target = "addinpl";
};

/// Resolved, validated instance.
struct Instance {
  CurveParams params;
  AffinePoint g;
  AffinePoint p_point;
  std::optional<uint64_t> ell;
  unsigned n;
  ControlMode mode;
  uint64_t seed;
};

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "prime modulus");
  cmd->add_option("--a", o.a, "curve coefficient a");
  cmd->add_option("--b", o.b, "curve coefficient b");
  cmd->add_option("--gx", o.gx, "base point x");
  cmd->add_option("--gy", o.gy, "base point y");
  cmd->add_option("--ell", o.ell, "discrete log of P (P = ell*G)");
  cmd->add_option("--px", o.px, "second point x");
  cmd->add_option("--py", o.py, "second point y");
  cmd->add_option("--n", o.n, "scalar register width");
  cmd->add_option("--mode", o.mode, "control mode: all|buggy")
      ->check(CLI::IsMember({"all", "buggy"}));
  cmd->add_option("--seed", o.seed, "seed for randomised state sets");
  cmd->add_option("--report", o.report, "report format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out, "write the report to this path");
  cmd->add_option("--config", o.config_path, "JSON config file (flags win)");
}

/// Applies config-file values underneath any flags the user typed.
void merge_config(CLI::App* cmd, Options& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw ConfigError("cannot open config file " + o.config_path);
  json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad config JSON: ") + e.what());
  }
  auto take = [&](const char* flag, const char* key, auto& slot) {
    using T = std::decay_t<decltype(slot)>;
    if (!cfg.contains(key)) return;
    const CLI::Option* opt = cmd->get_option_no_throw(std::string("--") + flag);
    if (opt != nullptr && opt->count() > 0) return;  // flags win on conflict
    if constexpr (std::is_same_v<T, std::optional<uint64_t>>) {
      slot = cfg.at(key).get<uint64_t>();
    } else {
      slot = cfg.at(key).get<T>();
    }
  };
  take("p", "p", o.p);
  take("a", "a", o.a);
  take("b", "b", o.b);
  take("gx", "gx", o.gx);
  take("gy", "gy", o.gy);
  take("ell", "ell", o.ell);
  take("px", "px", o.px);
  take("py", "py", o.py);
  take("n", "n", o.n);
  take("mode", "mode", o.mode);
  take("seed", "seed", o.seed);
  take("report", "report", o.report);
  take("out", "out", o.out);
  take("shots", "shots", o.shots);
  take("primes", "primes", o.primes);
  take("target", "target", o.target);
}

/// Config-file values bypass the flag validators; re-check the enums.
void validate_choices(const Options& o) {
  if (o.mode != "all" && o.mode != "buggy") {
    throw ConfigError("mode must be all or buggy, got '" + o.mode + "'");
  }
  if (o.report != "json" && o.report != "text") {
    throw ConfigError("report must be json or text, got '" + o.report + "'");
  }
  if (o.target != "addinpl" && o.target != "multadd" && o.target != "oracle") {
    throw ConfigError("target must be addinpl, multadd or oracle, got '" +
                      o.target + "'");
  }
}

Instance resolve(const Options& o) {
  CurveParams params(o.p, o.a, o.b);
  AffinePoint g = AffinePoint::xy(o.gx, o.gy);
  if (!on_curve(g, params)) {
    throw ConfigError("base point " + g.str() + " is not on the curve");
  }
  if (o.px.has_value() != o.py.has_value()) {
    throw ConfigError("--px and --py must be given together");
  }
  if (o.ell && o.px) {
    throw ConfigError("give either --ell or an explicit point, not both");
  }

  Instance inst{params, g, AffinePoint::identity(), std::nullopt, o.n,
                o.mode == "all" ? ControlMode::ControlAll
                                : ControlMode::BuggyConstSkip,
                o.seed};
  if (o.px) {
    inst.p_point = AffinePoint::xy(*o.px, *o.py);
    if (!on_curve(inst.p_point, params)) {
      throw ConfigError("point " + inst.p_point.str() + " is not on the curve");
    }
  } else {
    inst.ell = o.ell.value_or(2);  // the case study never fixes ell
    inst.p_point = scalar_mul(*inst.ell, g, params);
  }
  if (inst.n < 1) throw ConfigError("scalar width n must be >= 1");
  return inst;
}

void emit(const Options& o, const std::string& text, const json& j,
          std::ostream& out) {
  std::string payload = o.report == "json" ? j.dump(2) + "\n" : text;
  if (o.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + o.out);
  f << payload;
}

std::vector<uint64_t> parse_primes(const std::string& list) {
  std::vector<uint64_t> primes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos) {
      throw ConfigError("bad prime '" + item + "' in --primes");
    }
    primes.push_back(std::stoull(item));
  }
  if (primes.empty()) throw ConfigError("empty --primes list");
  return primes;
}

int report_exit(const VerificationReport& rep) {
  return rep.pass() ? kExitPass : kExitSemanticFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"semantic verification and costing of a reversible "
               "elliptic-curve discrete-log oracle"};
  app.require_subcommand(1);

  Options o;
  CLI::App* verify_addinpl =
      app.add_subcommand("verify-addinpl", "check the in-place point update "
                                           "against the classical group law");
  CLI::App* verify_control =
      app.add_subcommand("verify-control", "check the control law of the "
                                           "wrapped point update");
  CLI::App* verify_multadd =
      app.add_subcommand("verify-multadd", "check multiply-and-add and its "
                                           "loop invariant");
  CLI::App* verify_oracle =
      app.add_subcommand("verify-oracle", "check the two-stage oracle");
  CLI::App* demo_bug_cmd =
      app.add_subcommand("demo-bug", "demonstrate the control-law anomaly; "
                                     "exits 1 by design");
  CLI::App* sanity =
      app.add_subcommand("sanity-cx", "deterministic controlled-X histogram");
  CLI::App* metrics_cmd =
      app.add_subcommand("metrics", "cost table, control overhead and the "
                                    "structural cost bound");
  CLI::App* scaling_cmd =
      app.add_subcommand("scaling", "polynomial-scaling study across primes");
  CLI::App* export_cmd =
      app.add_subcommand("export-qasm", "write a circuit as OpenQASM 2.0");

  for (CLI::App* cmd : {verify_addinpl, verify_control, verify_multadd,
                        verify_oracle, demo_bug_cmd, sanity, metrics_cmd,
                        scaling_cmd, export_cmd}) {
    add_common_options(cmd, o);
  }
  sanity->add_option("--shots", o.shots, "number of simulated shots");
  scaling_cmd->add_option("--primes", o.primes, "comma-separated prime list");
  export_cmd->add_option("--target", o.target, "addinpl|multadd|oracle")
      ->check(CLI::IsMember({"addinpl", "multadd", "oracle"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    merge_config(cmd, o);
    validate_choices(o);

    if (cmd == sanity) {
      if (o.shots < 1) throw ConfigError("--shots must be >= 1");
      SanityCxResult res = sanity_cx(o.shots);
      std::ostringstream text;
      text << "sanity-cx shots=" << res.shots << " histogram ";
      for (const auto& [k, v] : res.histogram) text << "{" << k << ": " << v << "}";
      text << " verdict " << (res.pass ? "pass" : "fail") << "\n";
      emit(o, text.str(), res.to_json(), out);
      return res.pass ? kExitPass : kExitSemanticFail;
    }

    if (cmd == scaling_cmd) {
      ScalingFit fit = scaling_study(parse_primes(o.primes), o.n);
      bool pass = fit.exponent_t <= kMaxCostExponent &&
                  fit.exponent_cx <= kMaxCostExponent &&
                  fit.exponent_qubits <= kMaxQubitExponent;
      json j = fit.to_json();
      j["verdict"] = pass ? "pass" : "fail";
      std::string text = fit.to_text() + std::string("  verdict ") +
                         (pass ? "pass" : "fail") + "\n";
      emit(o, text, j, out);
      return pass ? kExitPass : kExitSemanticFail;
    }

    Instance inst = resolve(o);

    if (cmd == verify_addinpl) {
      VerificationReport rep = check_addinpl(inst.params, inst.g);
      emit(o, rep.to_text(), rep.to_json(), out);
      return report_exit(rep);
    }
    if (cmd == verify_control) {
      Circuit gadget = build_add_inpl(inst.params, inst.g);
      ControlLawStates states =
          control_states_for_gadget(gadget, inst.params, inst.g, inst.seed);
      VerificationReport rep = check_control_law(gadget, inst.mode, states);
      emit(o, rep.to_text(), rep.to_json(), out);
      return report_exit(rep);
    }
    if (cmd == verify_multadd) {
      VerificationReport rep = check_multadd(inst.params, inst.g, inst.n);
      emit(o, rep.to_text(), rep.to_json(), out);
      return report_exit(rep);
    }
    if (cmd == verify_oracle) {
      VerificationReport rep =
          check_oracle(inst.params, inst.g, inst.p_point, inst.n, inst.ell);
      emit(o, rep.to_text(), rep.to_json(), out);
      return report_exit(rep);
    }
    if (cmd == demo_bug_cmd) {
      BugDemoReport rep = demo_bug(inst.params, inst.g, inst.seed);
      emit(o, rep.to_text(), rep.to_json(), out);
      // Exits 1 by design: the report's whole point is a demonstrated failure.
      return kExitSemanticFail;
    }
    if (cmd == metrics_cmd) {
      MultAddBuild ma =
          build_mult_add(inst.params, inst.g, inst.n, ControlMode::ControlAll);
      OracleBuild ob = build_oracle(inst.params, inst.g, inst.p_point, inst.n,
                                    ControlMode::ControlAll);
      CtrlOverheadReport overhead = ctrl_overhead(inst.params, inst.g);
      std::vector<CostReport> rows{overhead.base, overhead.controlled,
                                   cost_report(ma.circuit, "MultAdd"),
                                   cost_report(ob.circuit, "Oracle")};
      bool pass = true;
      json bound_json;
      std::string bound_text;
      try {
        BoundReport bound =
            check_structural_bound(inst.params, inst.g, inst.p_point, inst.n);
        bound_json = bound.to_json();
        bound_text = bound.to_text();
      } catch (const BoundViolated& e) {
        pass = false;
        bound_json = json{{"check", "structural_bound"}, {"error", e.what()}};
        bound_text = std::string("structural bound VIOLATED: ") + e.what() + "\n";
      }
      json j{{"check", "metrics"},
             {"instance", params_json(inst.params)},
             {"cost_reports", json::array()},
             {"ctrl_overhead", overhead.to_json()},
             {"structural_bound", bound_json},
             {"verdict", pass ? "pass" : "fail"}};
      for (const auto& row : rows) j["cost_reports"].push_back(row.to_json());
      std::ostringstream overhead_line;
      overhead_line << "control overhead: +" << overhead.extra_control_qubits
                    << " control qubit (pre-decomposition)\n";
      std::string text = cost_table(rows) + overhead_line.str() + bound_text;
      emit(o, text, j, out);
      return pass ? kExitPass : kExitSemanticFail;
    }
    if (cmd == export_cmd) {
      Circuit circuit;
      if (o.target == "addinpl") {
        circuit = build_add_inpl(inst.params, inst.g);
      } else if (o.target == "multadd") {
        circuit = build_mult_add(inst.params, inst.g, inst.n, inst.mode).circuit;
      } else {
        circuit =
            build_oracle(inst.params, inst.g, inst.p_point, inst.n, inst.mode)
                .circuit;
      }
      std::string qasm = export_qasm(circuit);
      if (o.out.empty()) {
        out << qasm;
      } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw ConfigError("cannot write " + o.out);
        f << qasm;
      }
      return kExitPass;
    }
    throw ConfigError("unknown command");
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const InvalidCurve& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const NotOnCurve& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ScheduleHitsIdentity& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const FitDegenerate& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemanticFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemanticFail;
  }
}

}  // namespace revec::cli
