#include <cmath>
#include <cstdio>
#include <sstream>

#include "ptcms/cli.hpp"

namespace ptcms::cli {

Json to_json(const Check& c) {
  Json j;
  j["criterion"] = c.criterion;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["residual"] = c.residual;
  j["threshold"] = c.threshold;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json make_report(const std::string& command, Json flags, Json data, const std::vector<Check>& checks) {
  Json report;
  report["meta"] = {{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"flags", std::move(flags)}};
  report["data"] = std::move(data);
  report["checks"] = Json::array();
  for (const auto& c : checks) report["checks"].push_back(to_json(c));
  return report;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string rows_to_csv(const Json& rows) {
  std::ostringstream os;
  if (!rows.is_array() || rows.empty()) return "";
  bool first = true;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
    os << (first ? "" : ",") << it.key();
    first = false;
  }
  os << '\n';
  for (const auto& row : rows) {
    first = true;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
      os << (first ? "" : ",");
      if (row.contains(it.key())) os << csv_cell(row.at(it.key()));
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") {
    // Doubles are written by the library's shortest round-trip printer.
    return report.dump(2) + "\n";
  }
  const auto& data = report.at("data");
  if (data.is_array()) return rows_to_csv(data);
  std::string out;
  bool first = true;
  for (auto it = data.begin(); it != data.end(); ++it) {
    if (!first) out += '\n';
    out += "# " + it.key() + '\n' + rows_to_csv(it.value());
    first = false;
  }
  return out;
}

int first_failure(const std::vector<Check>& checks) {
  for (std::size_t i = 0; i < checks.size(); ++i)
    if (!checks[i].pass) return static_cast<int>(i);
  return -1;
}

}  // namespace ptcms::cli
