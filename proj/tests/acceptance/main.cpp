#include <algorithm>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "dioph/verify.hpp"

using namespace dioph::verify;

int main(int argc, char** argv) {
  CLI::App app("Acceptance criteria and golden-file properties, one line per suite");
  std::vector<std::string> names;
  std::string golden = DIOPH_GOLDEN_FILE;
  app.add_option("--suite", names, "Run only these suites");
  app.add_option("--golden", golden, "Golden-values file");
  CLI11_PARSE(app, argc, argv);

  std::vector<Suite> suites;
  try {
    for (const auto& n : names) suites.push_back(parse_suite(n));
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  if (suites.empty()) suites.assign(std::begin(kAllSuites), std::end(kAllSuites));

  const auto g = GoldenFile::load(golden);
  bool all = true;
  for (Suite s : suites) {
    const auto checks = run_suite(s, g);
    const auto passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    double seconds = 0;
    for (const auto& c : checks) seconds += c.seconds;
    const bool ok = passed == static_cast<long>(checks.size()) && !checks.empty();
    all = all && ok;
    if (criterion(s) != 0)
      std::cout << "criterion " << criterion(s) << " " << to_string(s);
    else
      std::cout << "invariants " << to_string(s);
    std::cout << ": " << (ok ? "PASS" : "FAIL") << " (" << passed << "/" << checks.size() << " checks, "
              << static_cast<int>(seconds + 0.5) << " s)\n";
    for (const auto& c : checks)
      if (!c.passed) std::cout << "  failed: " << c.name << ": " << c.detail << '\n';
  }
  return all ? 0 : 1;
}
