// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnet/apps.hpp"

namespace qnet {

struct VerifyOptions {
  std::uint64_t seed = 0;
  // Replaces every check's pinned tolerance when set (negative control).
  std::optional<double> tolerance_override;
  SolverOptions solver;
};

struct SuiteResult {
  std::string name;
  std::vector<AppCheck> checks;
  double seconds = 0.0;
  bool pass() const;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  double seconds = 0.0;
  bool pass() const;
};

std::vector<std::string> suite_names();  // core, entropy, apps, all
SuiteResult run_core_suite(const VerifyOptions& o);
SuiteResult run_entropy_suite(const VerifyOptions& o);
SuiteResult run_apps_suite(const VerifyOptions& o);
// "all" runs every suite in order; unknown names throw InputError.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& o);

}  // namespace qnet
