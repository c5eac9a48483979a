// SPDX-License-Identifier: MIT
#include <algorithm>
#include <chrono>

#include "qnet/verify.hpp"

namespace qnet {

bool SuiteResult::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const AppCheck& c) { return c.pass; });
}

bool VerifyReport::pass() const {
  return !suites.empty() && std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
}

std::vector<std::string> suite_names() { return {"core", "entropy", "apps", "all"}; }

VerifyReport run_verify(const std::string& suite, const VerifyOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport r;
  const bool all = suite == "all";
  if (!all && suite != "core" && suite != "entropy" && suite != "apps")
    throw InputError("unknown suite '" + suite + "' (expected core, entropy, apps or all)");
  if (all || suite == "core") r.suites.push_back(run_core_suite(o));
  if (all || suite == "entropy") r.suites.push_back(run_entropy_suite(o));
  if (all || suite == "apps") r.suites.push_back(run_apps_suite(o));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace qnet
