#include <CLI11.hpp>
#include <iostream>

#include "starhankel/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria, one line per criterion"};
  starhankel::VerifyOptions options;
  std::string golden;
  app.add_option("--golden", golden, "Frozen sweep CSV to compare against");
  app.add_option("--workers", options.workers, "Worker threads (0 = hardware)");
  app.add_option("--seed", options.seed, "Seed for randomized checks");
  CLI11_PARSE(app, argc, argv);
  if (!golden.empty()) options.golden_sweep = golden;

  int failed = 0;
  for (const auto& result : starhankel::run_acceptance(options)) {
    std::cout << starhankel::summary_line(result) << std::endl;
    if (!result.passed) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << 9 - failed << "/9" << std::endl;
  return failed ? 1 : 0;
}
