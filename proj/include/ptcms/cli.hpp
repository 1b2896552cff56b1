#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ptcms::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "ptcms";
inline constexpr const char* kToolVersion = "0.3.1";

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

struct Check {
  int criterion{0};  // 0 for checks outside the numbered acceptance list
  std::string name;
  double residual{0.0};
  double threshold{0.0};
  bool pass{false};
  std::string detail;
};

Json to_json(const Check& c);

/// meta / data / checks
Json make_report(const std::string& command, Json flags, Json data, const std::vector<Check>& checks);

/// "%.17g"; nan and inf spelled out.
std::string format_number(double x);

/// Rows of flat objects to CSV with a header from the first row's keys.
std::string rows_to_csv(const Json& rows);

/// Report rendering: JSON (2-space indent) or CSV of data rows. Object-valued
/// data (several tables) becomes "# name" sections separated by blank lines.
std::string render(const Json& report, const std::string& format);

/// Index of the first failed check, or -1.
int first_failure(const std::vector<Check>& checks);

/// Every numbered acceptance check from 1 to 10.
std::vector<Check> verify_suite();

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptcms::cli
