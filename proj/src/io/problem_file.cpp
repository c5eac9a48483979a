// SPDX-License-Identifier: MIT
#include <chrono>
#include <cmath>

#include "qnet/io.hpp"

namespace qnet {

std::string to_string(Task t) {
  switch (t) {
    case Task::MaxScore: return "max_score";
    case Task::DmaxToSet: return "d_max_to_set";
    case Task::MinEntropyState: return "min_entropy_state";
    case Task::MinEntropyNetwork: return "min_entropy_network";
    case Task::MinEntropyTest: return "min_entropy_test";
    case Task::DmaxPair: return "d_max_pair";
  }
  return "max_score";
}

Task task_from_string(const std::string& s) {
  for (Task t : {Task::MaxScore, Task::DmaxToSet, Task::MinEntropyState, Task::MinEntropyNetwork,
                 Task::MinEntropyTest, Task::DmaxPair})
    if (to_string(t) == s) return t;
  throw InputError("unknown task \"" + s + "\"");
}

int exit_code_for(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal: return 0;
    case SdpStatus::Infeasible:
    case SdpStatus::Unbounded: return 2;
    case SdpStatus::Inaccurate: return 3;
  }
  return 3;
}

namespace {

SetKind set_kind_from_string(const std::string& s, const std::string& where) {
  for (SetKind k : {SetKind::Comb, SetKind::DualComb, SetKind::Tester, SetKind::NoSig, SetKind::DualNoSig})
    if (to_string(k) == s) return k;
  throw InputError(where + ": unknown feasible set \"" + s +
                   "\" (expected comb, dual_comb, tester, nosig or dual_nosig)");
}

LabeledOperator operator_spec(const Json& j, const std::filesystem::path& base, const std::string& where) {
  if (j.is_string()) return read_operator_file(base / j.get<std::string>());
  if (!j.is_object()) throw InputError(where + ": expected a file name or an object");
  if (j.contains("file")) {
    if (!j.at("file").is_string()) throw InputError(where + ".file: expected a string");
    const std::filesystem::path f = base / j.at("file").get<std::string>();
    if (!std::filesystem::exists(f)) throw InputError(where + ".file: '" + f.string() + "' does not exist");
    return read_operator_file(f);
  }
  if (j.contains("matrix")) return operator_from_json(j.at("matrix"), where + ".matrix");
  if (j.contains("entries")) return operator_from_json(j, where);
  throw InputError(where + ": expected one of builder, file, matrix");
}

std::vector<Party> parties_from_layout(const SystemLayout& l, const std::string& where) {
  std::vector<Party> parties;
  for (int s = 1; s <= l.num_steps(); ++s) {
    const auto in = l.labels_with(Role::In, s);
    const auto out = l.labels_with(Role::Out, s);
    if (in.size() != 1 || out.size() != 1)
      throw InputError(where + ": party " + std::to_string(s) + " needs exactly one input and one output system");
    parties.push_back({in[0], out[0], l.at(in[0]).dim, l.at(out[0]).dim});
  }
  return parties;
}

FeasibleSetSpec feasible_spec(const Json& j, const std::string& where) {
  FeasibleSetSpec f;
  if (j.is_string()) {
    f.kind = set_kind_from_string(j.get<std::string>(), where);
    return f;
  }
  if (!j.is_object() || !j.contains("kind")) throw InputError(where + ": expected a string or an object with kind");
  if (!j.at("kind").is_string()) throw InputError(where + ".kind: expected a string");
  f.kind = set_kind_from_string(j.at("kind").get<std::string>(), where + ".kind");
  if (j.contains("outcomes")) {
    if (!j.at("outcomes").is_number_integer() || j.at("outcomes").get<int>() < 1)
      throw InputError(where + ".outcomes: expected a positive integer");
    f.outcomes = j.at("outcomes").get<int>();
  }
  if (j.contains("parties")) {
    const Json& ps = j.at("parties");
    if (!ps.is_array()) throw InputError(where + ".parties: expected an array");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string w = where + ".parties[" + std::to_string(i) + "]";
      if (!ps[i].is_object() || !ps[i].contains("in") || !ps[i].contains("out") || !ps[i].at("in").is_string() ||
          !ps[i].at("out").is_string())
        throw InputError(w + ": expected {\"in\": label, \"out\": label}");
      f.parties.push_back({ps[i].at("in").get<std::string>(), ps[i].at("out").get<std::string>(), 0, 0});
    }
  }
  return f;
}

void solver_spec(const Json& j, ProblemFile& p, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  if (j.contains("tol")) {
    if (!j.at("tol").is_number() || j.at("tol").get<double>() <= 0) throw InputError(where + ".tol: expected a positive number");
    p.solver.tol = j.at("tol").get<double>();
  }
  if (j.contains("gap_tol")) {
    if (!j.at("gap_tol").is_number() || j.at("gap_tol").get<double>() <= 0)
      throw InputError(where + ".gap_tol: expected a positive number");
    p.solver.gap_tol = j.at("gap_tol").get<double>();
  }
  if (j.contains("max_iter")) {
    if (!j.at("max_iter").is_number_integer() || j.at("max_iter").get<int>() < 1)
      throw InputError(where + ".max_iter: expected a positive integer");
    p.solver.max_iter = j.at("max_iter").get<int>();
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw InputError(where + ".seed: expected a nonnegative integer");
    p.seed = j.at("seed").get<std::uint64_t>();
  }
}

bool needs_set(Task t) { return t == Task::MaxScore || t == Task::DmaxToSet; }

}  // namespace

ProblemFile parse_problem(const Json& j, const std::filesystem::path& base) {
  const std::string root = "problem";
  if (!j.is_object()) throw InputError(root + ": expected an object");
  for (const auto& [key, _] : j.items())
    if (key != "task" && key != "layout" && key != "objective" && key != "b" && key != "feasible_set" &&
        key != "conditioning" && key != "solver")
      throw InputError(root + "." + key + ": unknown field");
  ProblemFile p;
  if (!j.contains("task") || !j.at("task").is_string()) throw InputError(root + ".task: missing or not a string");
  try {
    p.task = task_from_string(j.at("task").get<std::string>());
  } catch (const InputError& e) {
    throw InputError(root + ".task: " + e.what());
  }
  if (j.contains("solver")) solver_spec(j.at("solver"), p, root + ".solver");
  if (!j.contains("objective")) throw InputError(root + ".objective: missing field");
  const Json& obj = j.at("objective");
  std::optional<AppProblem> app;
  if (obj.is_object() && obj.contains("builder")) {
    if (!obj.at("builder").is_string()) throw InputError(root + ".objective.builder: expected a string");
    p.builder = obj.at("builder").get<std::string>();
    p.builder_d = default_dimension(*p.builder);
    if (obj.contains("d")) {
      if (!obj.at("d").is_number_integer()) throw InputError(root + ".objective.d: expected an integer");
      p.builder_d = obj.at("d").get<int>();
    }
    try {
      app = app_problem(*p.builder, p.builder_d);
    } catch (const InputError& e) {
      throw InputError(root + ".objective: " + e.what());
    }
    p.objective = app->omega;
    p.layout = app->feasible.layout;
  } else {
    p.objective = operator_spec(obj, base, root + ".objective");
  }
  if (j.contains("layout")) {
    p.layout = layout_from_json(j.at("layout"), root + ".layout");
    try {
      p.objective = align_to(p.objective, *p.layout);
    } catch (const InputError& e) {
      throw InputError(root + ".objective: does not match layout: " + e.what());
    }
  } else if (!p.layout) {
    p.layout = p.objective.layout;
  }
  if (j.contains("b")) {
    p.second = operator_spec(j.at("b"), base, root + ".b");
  } else if (p.task == Task::DmaxPair) {
    throw InputError(root + ".b: missing field (required by d_max_pair)");
  }
  if (j.contains("feasible_set")) {
    p.feasible = feasible_spec(j.at("feasible_set"), root + ".feasible_set");
  } else if (needs_set(p.task)) {
    if (!app) throw InputError(root + ".feasible_set: missing field");
    FeasibleSetSpec f;
    f.kind = p.task == Task::MaxScore ? app->feasible.kind : app->dual_feasible.kind;
    f.parties = p.task == Task::MaxScore ? app->feasible.parties : app->dual_feasible.parties;
    p.feasible = f;
  }
  if (j.contains("conditioning")) {
    const Json& c = j.at("conditioning");
    if (!c.is_array()) throw InputError(root + ".conditioning: expected an array of labels");
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_string()) throw InputError(root + ".conditioning[" + std::to_string(i) + "]: expected a string");
      const std::string l = c[i].get<std::string>();
      if (!p.layout->contains(l))
        throw InputError(root + ".conditioning[" + std::to_string(i) + "]: unknown label \"" + l + "\"");
      p.conditioning.push_back(l);
    }
  } else if (p.task == Task::MinEntropyState) {
    throw InputError(root + ".conditioning: missing field (required by min_entropy_state)");
  }
  return p;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  ProblemFile p = parse_problem(j, path.parent_path());
  p.digest = sha256_hex(text);
  return p;
}

ConstraintSet build_feasible_set(const ProblemFile& p) {
  if (!p.feasible) throw InputError("problem.feasible_set: missing field");
  const SystemLayout& l = *p.layout;
  const std::string where = "problem.feasible_set";
  auto parties = [&] {
    if (p.feasible->parties.empty()) return parties_from_layout(l, where);
    std::vector<Party> ps = p.feasible->parties;
    for (auto& q : ps) {
      if (!l.contains(q.in_label) || !l.contains(q.out_label))
        throw InputError(where + ".parties: unknown label in party (" + q.in_label + ", " + q.out_label + ")");
      q.d_in = l.at(q.in_label).dim;
      q.d_out = l.at(q.out_label).dim;
    }
    return ps;
  };
  try {
    switch (p.feasible->kind) {
      case SetKind::Comb: return comb_constraints(l);
      case SetKind::DualComb: return dual_comb_constraints(l);
      case SetKind::Tester: return tester_constraints(l, p.feasible->outcomes);
      case SetKind::NoSig: return nosig_constraints(parties());
      case SetKind::DualNoSig: return dual_nosig_constraints(parties());
      case SetKind::Custom: break;
    }
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": unsupported set");
}

namespace {

Json entropy_json(const EntropyValue& v) {
  Json j{{"entropy_bits", std::isfinite(v.bits) ? Json(v.bits) : Json(v.bits > 0 ? "inf" : "-inf")},
         {"lambda", v.lambda},
         {"method", v.method}};
  if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
  return j;
}

SdpStatus status_of(const std::optional<Certificate>& c) { return c ? c->status : SdpStatus::Optimal; }

}  // namespace

RunResult run_problem(const ProblemFile& p, const RunOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  SolverOptions so = p.solver;
  if (o.tol) so.tol = *o.tol;
  EntropyOptions eo;
  eo.solver = so;

  Json r{{"tool", "qnet"},
         {"version", toolkit_version()},
         {"command", "solve"},
         {"task", to_string(p.task)},
         {"input_digest", p.digest},
         {"seed", p.seed}};
  if (p.builder) r["builder"] = {{"id", *p.builder}, {"d", p.builder_d}};
  SdpStatus status = SdpStatus::Optimal;
  try {
    switch (p.task) {
      case Task::MaxScore: {
        const ConstraintSet cs = build_feasible_set(p);
        r["feasible_set"] = to_string(cs.kind);
        const ScoreResult s = max_score(p.objective, cs, so);
        status = s.certificate.status;
        r["value"] = s.omega_max;
        r["certificate"] = certificate_to_json(s.certificate);
        r["optimal_network"] = operator_to_json(s.optimal_network);
        if (o.dual) {
          r["dual_value"] = s.lambda;
          r["duality_gap"] = std::abs(s.lambda - s.omega_max);
          r["strong_duality"] = std::abs(s.lambda - s.omega_max) <= so.gap_tol * (1.0 + std::abs(s.omega_max));
          r["witness"] = operator_to_json(s.gamma);
        }
        break;
      }
      case Task::DmaxToSet: {
        const ConstraintSet cs = build_feasible_set(p);
        r["feasible_set"] = to_string(cs.kind);
        const EntropyValue v = d_max_to_set(p.objective, cs, eo);
        status = status_of(v.certificate);
        r.update(entropy_json(v));
        r["value"] = v.bits;
        if (o.dual) {
          r["dual_value"] = v.lambda;
          if (v.witness) r["witness"] = operator_to_json(*v.witness);
          if (v.maximizer) r["maximizer"] = operator_to_json(*v.maximizer);
        }
        break;
      }
      case Task::MinEntropyState: {
        const EntropyValue v = cond_min_entropy_state(p.objective, p.conditioning, eo);
        status = status_of(v.certificate);
        r.update(entropy_json(v));
        r["value"] = v.bits;
        if (o.dual && v.witness) r["witness"] = operator_to_json(*v.witness);
        break;
      }
      case Task::MinEntropyNetwork: {
        const NetworkEntropy n = network_min_entropy(p.objective, *p.layout, eo);
        status = status_of(n.value.certificate);
        r.update(entropy_json(n.value));
        r["value"] = n.value.bits;
        r["f_max"] = n.f_max;
        if (o.dual) r["interacting_network"] = operator_to_json(n.interacting_network);
        break;
      }
      case Task::MinEntropyTest: {
        const TestEntropy t = test_min_entropy(p.objective, *p.layout, eo);
        status = status_of(t.value.certificate);
        r.update(entropy_json(t.value));
        r["value"] = t.value.bits;
        r["p_max"] = t.p_max;
        break;
      }
      case Task::DmaxPair: {
        const EntropyValue v = d_max_pair(p.objective.op, align_to(*p.second, p.objective.layout).op);
        r.update(entropy_json(v));
        r["value"] = std::isfinite(v.bits) ? Json(v.bits) : r["entropy_bits"];
        break;
      }
    }
  } catch (const SdpStatusError& e) {
    status = e.status();
    r["message"] = e.what();
  }
  r["status"] = to_string(status);
  r["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return RunResult{r, exit_code_for(status)};
}

}  // namespace qnet
