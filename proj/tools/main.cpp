#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const hds::cli::RunResult r = hds::cli::run(args);
  if (r.exit_code == 2) {
    std::cerr << r.diagnostic << "\n";
  } else if (!r.diagnostic.empty()) {
    std::cout << r.diagnostic;
  } else {
    std::cout << r.report.dump(2) << "\n";
  }
  return r.exit_code;
}
