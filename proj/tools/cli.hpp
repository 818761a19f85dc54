#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hds/field.hpp"
#include "json.hpp"

namespace hds::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "x+yi", "x-yi", "yi", "x" or a JSON pair [x, y]. Throws UsageError.
cplx parse_complex(const std::string& s);

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 fail, 2 usage error
  nlohmann::ordered_json report;
  std::string diagnostic;  // set on usage errors
};

// args[0] is the program name. Never throws.
RunResult run(const std::vector<std::string>& args);

// Default tolerance: HDS_TOL when set and parseable, otherwise 1e-10.
double default_tolerance();

}  // namespace hds::cli
