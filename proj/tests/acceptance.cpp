#include "g5/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  g5::AcceptanceOptions opt;
  bool verbose = false;
  app.add_flag("--quick", opt.quick, "smaller corpora");
  app.add_option("--only", opt.only, "criterion numbers to run");
  app.add_flag("-v,--verbose", verbose, "print corpus sizes and timings");
  CLI11_PARSE(app, argc, argv);
  if (verbose) opt.log = [](const std::string& s) { std::cerr << "  " << s << "\n"; };
  opt.on_result = [&](const g5::CriterionResult& r) {
    std::cout << r.line() << "\n";
    if (verbose) std::cerr << "  criterion " << r.id << " took " << r.seconds << " s\n";
    std::cout.flush();
  };
  auto results = g5::run_acceptance(opt);
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
