#include <iostream>

#include <CLI11.hpp>

#include "dioph/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fit and freeze the golden-values file"};
  std::string out = "golden_values.json";
  dioph::verify::Options opt;
  app.add_option("-o,--out", out, "Output path");
  app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  try {
    const auto g = dioph::verify::fit_golden(opt);
    g.save(out);
    for (const auto& [id, e] : g.entries())
      std::cout << id << " = " << e.value << " +- " << e.tolerance << " (" << e.provenance << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "dioph_golden: " << e.what() << '\n';
    return 1;
  }
}
