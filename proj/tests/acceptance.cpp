// One PASS/FAIL line per acceptance criterion. Criterion 11 runs the CLI
// binary given as argv[1] twice and compares the reports byte for byte.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "ptcms/cli.hpp"

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_verify(const std::string& exe, const std::filesystem::path& out) {
  const std::string cmd = "\"" + exe + "\" verify --output \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-ptcms>\n";
    return 2;
  }

  const auto checks = ptcms::cli::verify_suite();
  std::map<int, std::vector<const ptcms::cli::Check*>> by_criterion;
  for (const auto& c : checks)
    if (c.criterion > 0) by_criterion[c.criterion].push_back(&c);

  int failed = 0;
  for (int k = 1; k <= 10; ++k) {
    const auto it = by_criterion.find(k);
    bool pass = it != by_criterion.end();
    std::string bad;
    if (pass)
      for (const auto* c : it->second)
        if (!c->pass) {
          pass = false;
          char buf[160];
          std::snprintf(buf, sizeof buf, " %s residual=%.3g threshold=%.3g", c->name.c_str(), c->residual,
                        c->threshold);
          bad += buf;
        }
    if (it == by_criterion.end()) bad = " no checks";
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << k << (pass ? "" : ":" + bad) << '\n';
    failed += pass ? 0 : 1;
  }

  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / ("ptcms_accept_" + std::to_string(::getpid()) + "_a.json");
  const auto second = dir / ("ptcms_accept_" + std::to_string(::getpid()) + "_b.json");
  const int code_a = run_verify(argv[1], first);
  const int code_b = run_verify(argv[1], second);
  const std::string a = slurp(first), b = slurp(second);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  const bool identical = !a.empty() && a == b;
  const bool pass11 = identical && code_a == 0 && code_b == 0;
  std::cout << (pass11 ? "PASS" : "FAIL") << " criterion 11";
  if (!pass11)
    std::cout << ": verify exit codes " << code_a << "," << code_b << "; reports "
              << (identical ? "byte-identical" : "differ");
  std::cout << '\n';
  failed += pass11 ? 0 : 1;

  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
  return failed == 0 ? 0 : 1;
}
