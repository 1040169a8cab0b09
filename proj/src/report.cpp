#include "orehom/report.hpp"

#include <json.hpp>
#include <sstream>

namespace orehom {

void Report::value(std::string key, std::string v) {
  values.emplace_back(std::move(key), std::move(v));
}

void Report::check(std::string name, const CheckResult& r) {
  checks.push_back(ReportRow{std::move(name), r.ok, r.witness});
}

bool Report::all_pass() const {
  for (const auto& row : checks)
    if (!row.pass) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  for (const auto& [k, v] : values) out << k << ": " << v << "\n";
  for (const auto& row : checks) {
    out << "check " << row.name << ": " << (row.pass ? "pass" : "FAIL")
        << "\n";
    if (row.witness) {
      out << "  identity: " << row.witness->identity << "\n";
      out << "  at:";
      for (std::size_t i : row.witness->indices) out << " " << i;
      out << "\n";
      out << "  lhs: " << row.witness->lhs << "\n";
      out << "  rhs: " << row.witness->rhs << "\n";
    }
  }
  if (error) out << "error: " << *error << "\n";
  out << "exit: " << exit_code << "\n";
  return out.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["values"] = nlohmann::ordered_json::array();
  for (const auto& [k, v] : values)
    j["values"].push_back({{"key", k}, {"value", v}});
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& row : checks) {
    nlohmann::ordered_json c;
    c["name"] = row.name;
    c["pass"] = row.pass;
    if (row.witness) {
      c["witness"] = {{"identity", row.witness->identity},
                      {"indices", row.witness->indices},
                      {"lhs", row.witness->lhs},
                      {"rhs", row.witness->rhs}};
    } else {
      c["witness"] = nullptr;
    }
    j["checks"].push_back(c);
  }
  if (error)
    j["error"] = *error;
  else
    j["error"] = nullptr;
  j["exit"] = exit_code;
  return j.dump(2) + "\n";
}

}  // namespace orehom
