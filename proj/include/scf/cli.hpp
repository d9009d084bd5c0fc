#pragma once

#include <string>
#include <vector>

namespace scf {

// Exit codes: 0 success, 1 usage/IO, 2 non-SCF, 3 verification failure.
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string> &args);

} // namespace scf
