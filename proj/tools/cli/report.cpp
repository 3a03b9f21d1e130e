#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace locoh::cli {

using nlohmann::json;
using nlohmann::ordered_json;

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }) &&
         std::all_of(cases.begin(), cases.end(), [](const Report& c) { return c.passed(); });
}

void Report::check(std::string check_name, bool ok, std::string detail) {
  checks.push_back({std::move(check_name), ok, std::move(detail)});
}

ordered_json table_to_json(const HilbertTable& t) {
  ordered_json out = ordered_json::array();
  for (const auto& [key, e] : t.entries())
    out.push_back({{"i", key.first}, {"d", key.second}, {"dim", e.dim}, {"stabilized", e.stabilized}, {"k_used", e.k_used}});
  return out;
}

HilbertTable table_from_json(const json& entries) {
  HilbertTable t;
  for (const auto& e : entries)
    t.set(e.at("i").get<int>(), e.at("d").get<int>(),
          {e.at("dim").get<std::int64_t>(), e.at("stabilized").get<bool>(), e.at("k_used").get<int>()});
  return t;
}

ordered_json report_to_json(const Report& r) {
  if (r.is_table()) return table_to_json(r.tables.front().second);
  ordered_json out = ordered_json::object();
  out["name"] = r.name;
  out["passed"] = r.passed();
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json j = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  ordered_json tables = ordered_json::object();
  for (const auto& [name, t] : r.tables) tables[name] = table_to_json(t);
  out["tables"] = std::move(tables);
  if (!r.notes.empty()) out["notes"] = r.notes;
  if (!r.cases.empty()) {
    ordered_json cases = ordered_json::array();
    for (const auto& c : r.cases) cases.push_back(report_to_json(c));
    out["cases"] = std::move(cases);
  }
  return out;
}

namespace {

void csv_table(std::ostream& out, const HilbertTable& t) {
  out << "i,d,dim,stabilized,k_used\n";
  for (const auto& [key, e] : t.entries())
    out << key.first << ',' << key.second << ',' << e.dim << ',' << (e.stabilized ? "true" : "false") << ','
        << e.k_used << '\n';
}

void csv_report(std::ostream& out, const Report& r, const std::string& prefix) {
  const std::string name = prefix.empty() ? r.name : prefix + "/" + r.name;
  for (const auto& c : r.checks) out << "# check " << name << ' ' << c.name << ' ' << (c.passed ? "pass" : "FAIL") << '\n';
  for (const auto& [tname, t] : r.tables) {
    out << "# table " << name << ' ' << tname << '\n';
    csv_table(out, t);
  }
  for (const auto& c : r.cases) csv_report(out, c, name);
}

void pretty_table(std::ostream& out, const HilbertTable& t, const std::string& indent) {
  if (t.empty()) {
    out << indent << "no entries\n";
    return;
  }
  int lo = t.entries().begin()->first.second, hi = lo;
  for (const auto& [key, e] : t.entries()) {
    lo = std::min(lo, key.second);
    hi = std::max(hi, key.second);
  }
  out << indent << std::setw(6) << "i\\d";
  for (int d = lo; d <= hi; ++d) out << std::setw(6) << d;
  out << '\n';
  int current = t.entries().begin()->first.first - 1;
  for (const auto& [key, e] : t.entries()) {
    if (key.first != current) {
      if (current != t.entries().begin()->first.first - 1) out << '\n';
      current = key.first;
      out << indent << std::setw(6) << current;
      for (int d = lo; d <= hi; ++d) {
        const HilbertEntry* x = t.find(current, d);
        std::string cell = x ? std::to_string(x->dim) + (x->stabilized ? "" : "?") : ".";
        out << std::setw(6) << cell;
      }
    }
  }
  out << '\n';
}

void pretty_report(std::ostream& out, const Report& r, const std::string& indent) {
  if (r.is_table()) {
    pretty_table(out, r.tables.front().second, indent);
    return;
  }
  out << indent << r.name << ": " << (r.passed() ? "pass" : "FAIL") << '\n';
  for (const auto& c : r.checks) {
    out << indent << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  for (const auto& [name, t] : r.tables) {
    out << indent << "  " << name << ":\n";
    pretty_table(out, t, indent + "    ");
  }
  for (const auto& n : r.notes) out << indent << "  note: " << n << '\n';
  for (const auto& c : r.cases) pretty_report(out, c, indent + "  ");
}

}  // namespace

std::string emit_report(const Report& r, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << report_to_json(r).dump(2) << '\n';
  } else if (format == "csv") {
    if (r.is_table())
      csv_table(out, r.tables.front().second);
    else
      csv_report(out, r, "");
  } else {
    pretty_report(out, r, "");
  }
  return out.str();
}

}  // namespace locoh::cli
