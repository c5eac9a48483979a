// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "qnet/types.hpp"

namespace qnet {

enum class Role { In, Out };

struct System {
  std::string label;
  int dim = 1;
  Role role = Role::In;
  int step = 1;
};

// Ordered tensor factors. The first system is the most significant
// Kronecker factor. Labels are unique and dims >= 1. Step contiguity is
// only demanded by the comb/tester constructors (link products may leave
// gaps), see require_comb_shape().
class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<System> systems);

  const std::vector<System>& systems() const { return systems_; }
  std::size_t size() const { return systems_.size(); }
  bool empty() const { return systems_.empty(); }
  const System& operator[](std::size_t i) const { return systems_[i]; }

  Eigen::Index total_dim() const;
  std::vector<int> dims() const;
  std::vector<std::string> labels() const;
  bool contains(const std::string& label) const;
  // Throws InputError on unknown label.
  std::size_t index_of(const std::string& label) const;
  const System& at(const std::string& label) const;

  // Product of dims of the listed labels.
  Eigen::Index dim_of(const std::vector<std::string>& labels) const;
  // Systems with the given labels removed (order preserved).
  SystemLayout without(const std::vector<std::string>& labels) const;
  // Systems with the given labels, in the order given.
  SystemLayout select(const std::vector<std::string>& labels) const;
  SystemLayout concat(const SystemLayout& other) const;

  int num_steps() const;  // largest step index, 0 when empty
  std::vector<std::string> labels_with(Role role, int step) const;
  std::vector<std::string> labels_with(Role role) const;
  std::vector<std::string> labels_before(int step) const;  // all systems with step < given
  std::vector<std::string> labels_after(int step) const;   // all systems with step > given
  Eigen::Index dim_with(Role role) const;
  Eigen::Index dim_with(Role role, int step) const;

  // Throws InputError unless steps are 1..N and every step owns at least
  // one input and one output system.
  void require_comb_shape() const;

  bool operator==(const SystemLayout& o) const;
  bool operator!=(const SystemLayout& o) const { return !(*this == o); }

 private:
  std::vector<System> systems_;
};

std::string to_string(Role r);
Role role_from_string(const std::string& s);

}  // namespace qnet
