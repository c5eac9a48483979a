// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qnet/apps.hpp"
#include "qnet/entropy.hpp"

namespace qnet {

using Json = nlohmann::json;

std::string toolkit_version();
std::string sha256_hex(std::string_view bytes);
std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& text);

// {"systems": [{"label", "dim", "role": "in"|"out", "step"}]}
Json layout_to_json(const SystemLayout& l);
SystemLayout layout_from_json(const Json& j, const std::string& where = "layout");

// {"labels": [...], "dims": [...], "roles"?: [...], "steps"?: [...],
//  "entries": [[[re, im], ...], ...]}; a plain number is accepted as a real entry.
Json operator_to_json(const LabeledOperator& op);
LabeledOperator operator_from_json(const Json& j, const std::string& where = "matrix");
LabeledOperator read_operator_file(const std::filesystem::path& p);
void write_operator_file(const std::filesystem::path& p, const LabeledOperator& op);

Json certificate_to_json(const Certificate& c);
Json app_report_to_json(const AppReport& r);

enum class Task { MaxScore, DmaxToSet, MinEntropyState, MinEntropyNetwork, MinEntropyTest, DmaxPair };
std::string to_string(Task t);
Task task_from_string(const std::string& s);

struct FeasibleSetSpec {
  SetKind kind = SetKind::Comb;
  int outcomes = 1;
  std::vector<Party> parties;
};

struct ProblemFile {
  Task task = Task::MaxScore;
  std::optional<SystemLayout> layout;
  LabeledOperator objective;
  std::optional<LabeledOperator> second;  // b of d_max_pair
  std::optional<FeasibleSetSpec> feasible;
  std::vector<std::string> conditioning;
  std::optional<std::string> builder;  // objective produced by an application builder
  int builder_d = 0;
  SolverOptions solver;
  std::uint64_t seed = 0;
  std::string digest;  // SHA-256 of the problem file bytes
};

// Field paths ("problem.objective.file", ...) appear in every InputError.
ProblemFile parse_problem(const Json& j, const std::filesystem::path& base_dir);
ProblemFile load_problem(const std::filesystem::path& p);
ConstraintSet build_feasible_set(const ProblemFile& p);

struct RunOptions {
  bool dual = false;             // include dual value, witness and duality check
  std::optional<double> tol;     // overrides the solver feasibility tolerance
};

struct RunResult {
  Json report;
  int exit_code = 0;  // 0 optimal, 2 infeasible/unbounded, 3 inaccurate
};
RunResult run_problem(const ProblemFile& p, const RunOptions& o);

// Exit code for a final solver status.
int exit_code_for(SdpStatus s);

}  // namespace qnet
