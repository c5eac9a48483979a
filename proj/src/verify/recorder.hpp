// SPDX-License-Identifier: MIT
#pragma once

#include <chrono>
#include <string>

#include "qnet/verify.hpp"

namespace qnet::detail {

// Collects checks for one suite, applying the tolerance override.
class Recorder {
 public:
  Recorder(std::string name, const VerifyOptions& o) : o_(o), start_(std::chrono::steady_clock::now()) {
    r_.name = std::move(name);
  }
  void add(std::string name, CheckKind kind, double value, double reference, double pinned) {
    r_.checks.push_back(make_check(std::move(name), kind, value, reference, o_.tolerance_override.value_or(pinned)));
  }
  void flag(std::string name, bool ok) { add(std::move(name), CheckKind::Equal, ok ? 1.0 : 0.0, 1.0, 0.0); }
  // Runs fn and records a failed check named `name` if it throws.
  template <class F>
  void guarded(const std::string& name, F&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      r_.checks.push_back(make_check(name + " (threw: " + e.what() + ")", CheckKind::Equal, 0.0, 1.0, 0.0));
    }
  }
  SuiteResult finish() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(r_);
  }
  const VerifyOptions& options() const { return o_; }

 private:
  SuiteResult r_;
  const VerifyOptions& o_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qnet::detail
