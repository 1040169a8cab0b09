#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orehom/common.hpp"

namespace orehom {

struct ReportRow {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;
};

// Deterministic command report: insertion-ordered values and check rows,
// rendered as text or versioned JSON ("schema": 1). Identical inputs must
// produce byte-identical renderings.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<ReportRow> checks;
  std::optional<std::string> error;
  int exit_code = 0;

  void value(std::string key, std::string v);
  void check(std::string name, const CheckResult& r);
  bool all_pass() const;

  std::string text() const;
  std::string json() const;
};

}  // namespace orehom
