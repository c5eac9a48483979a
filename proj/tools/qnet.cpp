// SPDX-License-Identifier: MIT
// Command-line front end: solve problem files, run applications, evaluate
// max-relative entropies and run the verification suites.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qnet/io.hpp"
#include "qnet/verify.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitChecksFailed = 4;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("QNET_SEED")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(s, &pos);
      if (pos == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw qnet::InputError("QNET_SEED must be a nonnegative integer, got '" + std::string(s) + "'");
  }
  return 0;
}

void emit(const qnet::Json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    qnet::write_text_file(out, text);
  }
}

qnet::Json checks_json(const std::vector<qnet::AppCheck>& checks) {
  qnet::Json arr = qnet::Json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"kind", qnet::to_string(c.kind)},
                   {"value", c.value},
                   {"reference", c.reference},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"qnet: quantum network optimization and entropy toolkit"};
  cli.require_subcommand(1);
  cli.set_version_flag("--version", qnet::toolkit_version());

  std::string file, out;
  bool dual = false;
  std::optional<double> tol;
  auto* solve = cli.add_subcommand("solve", "Solve a JSON problem file");
  solve->add_option("-f,--file", file, "Problem file")->required();
  solve->add_flag("--dual", dual, "Report the dual value, witness and duality check");
  solve->add_option("--out", out, "Write the report here instead of stdout");
  solve->add_option("--tol", tol, "Solver feasibility tolerance")->check(CLI::PositiveNumber);

  std::string app_name;
  std::optional<int> app_d;
  std::optional<double> app_tol;
  auto* app = cli.add_subcommand("app", "Run a built-in application end to end");
  app->add_option("name", app_name, "inversion | conjugation | controlization | ocb | grover")->required();
  app->add_option("--d", app_d, "Dimension (list size K for grover)");
  app->add_option("--out", out, "Write the report here instead of stdout");
  app->add_option("--tolerance-override", app_tol, "Replace every acceptance tolerance")->check(CLI::NonNegativeNumber);

  std::string a_file, b_file;
  auto* entropy = cli.add_subcommand("entropy", "Entropic quantities of operator files");
  entropy->require_subcommand(1);
  auto* dmax = entropy->add_subcommand("dmax", "D_max(A || B) of two operators");
  dmax->add_option("--a", a_file, "Operator A")->required();
  dmax->add_option("--b", b_file, "Operator B")->required();
  dmax->add_option("--out", out, "Write the report here instead of stdout");

  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::optional<double> verify_tol;
  auto* verify = cli.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", suite, "core | entropy | apps | all")
      ->check(CLI::IsMember({"core", "entropy", "apps", "all"}));
  verify->add_option("--seed", seed, "Master seed (default: $QNET_SEED or 0)");
  verify->add_option("--tolerance-override", verify_tol, "Replace every check tolerance")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--out", out, "Write the report here instead of stdout");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve) {
      const qnet::ProblemFile p = qnet::load_problem(file);
      const qnet::RunResult r = qnet::run_problem(p, qnet::RunOptions{dual, tol});
      emit(r.report, out);
      return r.exit_code;
    }
    if (*app) {
      qnet::AppOptions o;
      o.seed = default_seed();
      o.tolerance_override = app_tol;
      const int d = app_d.value_or(qnet::default_dimension(app_name));
      const qnet::AppReport r = qnet::run_app(app_name, d, o);
      qnet::Json j = qnet::app_report_to_json(r);
      j["tool"] = "qnet";
      j["version"] = qnet::toolkit_version();
      j["command"] = "app";
      j["seed"] = o.seed;
      emit(j, out);
      for (const auto& c : r.checks) std::cerr << (c.pass ? "PASS  " : "FAIL  ") << c.name << "\n";
      return r.pass() ? 0 : kExitChecksFailed;
    }
    if (*dmax) {
      const qnet::LabeledOperator a = qnet::read_operator_file(a_file);
      const qnet::LabeledOperator b = qnet::read_operator_file(b_file);
      const qnet::EntropyValue v = qnet::d_max_pair(a.op, qnet::align_to(b, a.layout).op);
      qnet::Json j{{"tool", "qnet"},
                   {"version", qnet::toolkit_version()},
                   {"command", "entropy dmax"},
                   {"input_digest", qnet::sha256_hex(qnet::read_text_file(a_file) + qnet::read_text_file(b_file))},
                   {"lambda", v.lambda},
                   {"method", v.method}};
      j["value"] = std::isfinite(v.bits) ? qnet::Json(v.bits) : qnet::Json(v.bits > 0 ? "inf" : "-inf");
      emit(j, out);
      return 0;
    }
    if (*verify) {
      qnet::VerifyOptions o;
      o.seed = seed ? *seed : default_seed();
      o.tolerance_override = verify_tol;
      const qnet::VerifyReport r = qnet::run_verify(suite, o);
      qnet::Json suites = qnet::Json::array();
      for (const auto& s : r.suites) {
        suites.push_back({{"name", s.name}, {"pass", s.pass()}, {"seconds", s.seconds}, {"checks", checks_json(s.checks)}});
        for (const auto& c : s.checks)
          std::cerr << (c.pass ? "PASS  " : "FAIL  ") << "[" << s.name << "] " << c.name << "\n";
      }
      emit(qnet::Json{{"tool", "qnet"},
                      {"version", qnet::toolkit_version()},
                      {"command", "verify"},
                      {"suite", suite},
                      {"seed", o.seed},
                      {"pass", r.pass()},
                      {"seconds", r.seconds},
                      {"suites", suites}},
           out);
      return r.pass() ? 0 : kExitChecksFailed;
    }
  } catch (const qnet::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const qnet::SdpStatusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qnet::exit_code_for(e.status());
  } catch (const qnet::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
  return kExitInput;
}
