// SPDX-License-Identifier: MIT
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "qnet/io.hpp"

namespace qnet {

std::string toolkit_version() { return QNET_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw NumericalError("sha256: digest computation failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot open '" + p.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write '" + p.string() + "'");
  out << text;
  if (!out) throw InputError("write to '" + p.string() + "' failed");
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + "." + key + ": missing field");
  return *it;
}

int as_int(const Json& j, const std::string& where, int min_value) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < min_value || v > 1'000'000) throw InputError(where + ": value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

double as_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(where + ": not finite");
  return v;
}

}  // namespace

Json layout_to_json(const SystemLayout& l) {
  Json systems = Json::array();
  for (const auto& s : l.systems())
    systems.push_back({{"label", s.label}, {"dim", s.dim}, {"role", to_string(s.role)}, {"step", s.step}});
  return Json{{"systems", systems}};
}

SystemLayout layout_from_json(const Json& j, const std::string& where) {
  const Json& arr = field(j, "systems", where);
  if (!arr.is_array()) throw InputError(where + ".systems: expected an array");
  std::vector<System> systems;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = where + ".systems[" + std::to_string(i) + "]";
    System s;
    s.label = as_string(field(arr[i], "label", w), w + ".label");
    s.dim = as_int(field(arr[i], "dim", w), w + ".dim", 1);
    const std::string role = as_string(field(arr[i], "role", w), w + ".role");
    try {
      s.role = role_from_string(role);
    } catch (const InputError&) {
      throw InputError(w + ".role: expected \"in\" or \"out\", got \"" + role + "\"");
    }
    s.step = as_int(field(arr[i], "step", w), w + ".step", 1);
    systems.push_back(s);
  }
  try {
    return SystemLayout(std::move(systems));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Json operator_to_json(const LabeledOperator& op) {
  Json labels = Json::array(), dims = Json::array(), roles = Json::array(), steps = Json::array();
  for (const auto& s : op.layout.systems()) {
    labels.push_back(s.label);
    dims.push_back(s.dim);
    roles.push_back(to_string(s.role));
    steps.push_back(s.step);
  }
  Json rows = Json::array();
  const ComplexMatrix& m = op.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return Json{{"labels", labels}, {"dims", dims}, {"roles", roles}, {"steps", steps}, {"entries", rows}};
}

LabeledOperator operator_from_json(const Json& j, const std::string& where) {
  const Json& labels = field(j, "labels", where);
  const Json& dims = field(j, "dims", where);
  if (!labels.is_array() || !dims.is_array())
    throw InputError(where + ": labels and dims must be arrays");
  if (labels.size() != dims.size())
    throw InputError(where + ".dims: " + std::to_string(dims.size()) + " dims for " +
                     std::to_string(labels.size()) + " labels");
  const Json* roles = j.contains("roles") ? &j.at("roles") : nullptr;
  const Json* steps = j.contains("steps") ? &j.at("steps") : nullptr;
  if (roles && (!roles->is_array() || roles->size() != labels.size()))
    throw InputError(where + ".roles: expected one role per label");
  if (steps && (!steps->is_array() || steps->size() != labels.size()))
    throw InputError(where + ".steps: expected one step per label");
  std::vector<System> systems;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string idx = "[" + std::to_string(i) + "]";
    System s;
    s.label = as_string(labels[i], where + ".labels" + idx);
    s.dim = as_int(dims[i], where + ".dims" + idx, 1);
    if (roles) {
      const std::string r = as_string((*roles)[i], where + ".roles" + idx);
      if (r != "in" && r != "out") throw InputError(where + ".roles" + idx + ": expected \"in\" or \"out\"");
      s.role = role_from_string(r);
    }
    if (steps) s.step = as_int((*steps)[i], where + ".steps" + idx, 1);
    systems.push_back(s);
  }
  SystemLayout layout;
  try {
    layout = SystemLayout(std::move(systems));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  const Eigen::Index n = layout.total_dim();
  if (n > 4096) throw InputError(where + ": operator dimension " + std::to_string(n) + " exceeds 4096");
  const Json& rows = field(j, "entries", where);
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    throw InputError(where + ".entries: expected " + std::to_string(n) + " rows (product of dims)");
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    const std::string wr = where + ".entries[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw InputError(wr + ": expected " + std::to_string(n) + " entries");
    for (Eigen::Index c = 0; c < n; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      const std::string we = wr + "[" + std::to_string(c) + "]";
      if (e.is_number()) {
        m(r, c) = cplx(as_number(e, we), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        m(r, c) = cplx(as_number(e[0], we + "[0]"), as_number(e[1], we + "[1]"));
      } else {
        throw InputError(we + ": expected a number or a [re, im] pair");
      }
    }
  }
  try {
    return LabeledOperator(layout, HermitianOperator(m));
  } catch (const InputError& e) {
    throw InputError(where + ".entries: " + e.what());
  }
}

LabeledOperator read_operator_file(const std::filesystem::path& p) {
  Json j;
  try {
    j = Json::parse(read_text_file(p));
  } catch (const Json::parse_error& e) {
    throw InputError(p.string() + ": " + e.what());
  }
  return operator_from_json(j, p.filename().string());
}

void write_operator_file(const std::filesystem::path& p, const LabeledOperator& op) {
  write_text_file(p, operator_to_json(op).dump(2) + "\n");
}

Json certificate_to_json(const Certificate& c) {
  return Json{{"status", to_string(c.status)},
              {"primal_value", c.primal_value},
              {"dual_value", c.dual_value},
              {"residual_primal", c.residual_primal},
              {"residual_dual", c.residual_dual},
              {"gap", c.gap},
              {"iterations", c.iterations},
              {"rows", c.rows},
              {"verified", c.verified}};
}

Json app_report_to_json(const AppReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"kind", to_string(c.kind)},
                      {"value", c.value},
                      {"reference", std::isfinite(c.reference) ? Json(c.reference) : Json(nullptr)},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_to_json(c));
  return Json{{"app", r.id}, {"d", r.d}, {"pass", r.pass()}, {"checks", checks}, {"certificates", certs}};
}

}  // namespace qnet
