// SPDX-License-Identifier: MIT
#include <algorithm>
#include <set>

#include "qnet/layout.hpp"

namespace qnet {

SystemLayout::SystemLayout(std::vector<System> systems) : systems_(std::move(systems)) {
  std::set<std::string> seen;
  for (const auto& s : systems_) {
    if (s.label.empty()) throw InputError("layout: empty system label");
    if (!seen.insert(s.label).second) throw InputError("layout: duplicate label '" + s.label + "'");
    if (s.dim < 1) throw InputError("layout: system '" + s.label + "' has dim < 1");
    if (s.step < 1) throw InputError("layout: system '" + s.label + "' has step < 1");
  }
}

Eigen::Index SystemLayout::total_dim() const {
  Eigen::Index d = 1;
  for (const auto& s : systems_) d *= s.dim;
  return d;
}

std::vector<int> SystemLayout::dims() const {
  std::vector<int> out;
  for (const auto& s : systems_) out.push_back(s.dim);
  return out;
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  for (const auto& s : systems_) out.push_back(s.label);
  return out;
}

bool SystemLayout::contains(const std::string& label) const {
  return std::any_of(systems_.begin(), systems_.end(),
                     [&](const System& s) { return s.label == label; });
}

std::size_t SystemLayout::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < systems_.size(); ++i)
    if (systems_[i].label == label) return i;
  throw InputError("unknown system label '" + label + "'");
}

const System& SystemLayout::at(const std::string& label) const { return systems_[index_of(label)]; }

Eigen::Index SystemLayout::dim_of(const std::vector<std::string>& labels) const {
  Eigen::Index d = 1;
  for (const auto& l : labels) d *= at(l).dim;
  return d;
}

SystemLayout SystemLayout::without(const std::vector<std::string>& labels) const {
  for (const auto& l : labels) index_of(l);
  std::vector<System> out;
  for (const auto& s : systems_)
    if (std::find(labels.begin(), labels.end(), s.label) == labels.end()) out.push_back(s);
  return SystemLayout(std::move(out));
}

SystemLayout SystemLayout::select(const std::vector<std::string>& labels) const {
  std::vector<System> out;
  for (const auto& l : labels) out.push_back(at(l));
  return SystemLayout(std::move(out));
}

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
  std::vector<System> out = systems_;
  out.insert(out.end(), other.systems_.begin(), other.systems_.end());
  return SystemLayout(std::move(out));
}

int SystemLayout::num_steps() const {
  int n = 0;
  for (const auto& s : systems_) n = std::max(n, s.step);
  return n;
}

std::vector<std::string> SystemLayout::labels_with(Role role, int step) const {
  std::vector<std::string> out;
  for (const auto& s : systems_)
    if (s.role == role && s.step == step) out.push_back(s.label);
  return out;
}

std::vector<std::string> SystemLayout::labels_with(Role role) const {
  std::vector<std::string> out;
  for (const auto& s : systems_)
    if (s.role == role) out.push_back(s.label);
  return out;
}

std::vector<std::string> SystemLayout::labels_before(int step) const {
  std::vector<std::string> out;
  for (const auto& s : systems_)
    if (s.step < step) out.push_back(s.label);
  return out;
}

std::vector<std::string> SystemLayout::labels_after(int step) const {
  std::vector<std::string> out;
  for (const auto& s : systems_)
    if (s.step > step) out.push_back(s.label);
  return out;
}

Eigen::Index SystemLayout::dim_with(Role role) const { return dim_of(labels_with(role)); }

Eigen::Index SystemLayout::dim_with(Role role, int step) const {
  return dim_of(labels_with(role, step));
}

void SystemLayout::require_comb_shape() const {
  const int n = num_steps();
  if (n < 1) throw InputError("layout: no steps");
  for (int k = 1; k <= n; ++k) {
    if (labels_with(Role::In, k).empty())
      throw InputError("layout: step " + std::to_string(k) + " has no input system");
    if (labels_with(Role::Out, k).empty())
      throw InputError("layout: step " + std::to_string(k) + " has no output system");
  }
}

bool SystemLayout::operator==(const SystemLayout& o) const {
  if (systems_.size() != o.systems_.size()) return false;
  for (std::size_t i = 0; i < systems_.size(); ++i) {
    const auto& a = systems_[i];
    const auto& b = o.systems_[i];
    if (a.label != b.label || a.dim != b.dim || a.role != b.role || a.step != b.step) return false;
  }
  return true;
}

std::string to_string(Role r) { return r == Role::In ? "in" : "out"; }

Role role_from_string(const std::string& s) {
  if (s == "in") return Role::In;
  if (s == "out") return Role::Out;
  throw InputError("role must be \"in\" or \"out\", got \"" + s + "\"");
}

}  // namespace qnet
