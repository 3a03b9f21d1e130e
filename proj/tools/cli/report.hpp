#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "locoh/gmod.hpp"

namespace locoh::cli {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string name;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, HilbertTable>> tables;
  std::vector<std::string> notes;
  std::vector<Report> cases;  // verify corpus

  bool passed() const;
  /// A bare table report: one table, no checks, no cases.
  bool is_table() const { return checks.empty() && cases.empty() && tables.size() == 1; }
  void check(std::string check_name, bool ok, std::string detail = {});
};

nlohmann::ordered_json table_to_json(const HilbertTable& t);
HilbertTable table_from_json(const nlohmann::json& entries);
nlohmann::ordered_json report_to_json(const Report& r);

/// format is json, csv or pretty. Output is a pure function of the report.
std::string emit_report(const Report& r, const std::string& format);

}  // namespace locoh::cli
