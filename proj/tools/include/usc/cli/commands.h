#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "usc/verdict.h"

namespace usc::cli {

// Outcome of one subcommand. Exit codes: 0 true / pass / certified,
// 1 false / fail / disconnected / strict subset, 2 usage or validation error.
struct Report {
  std::string command;
  std::string verdict;
  std::vector<std::string> details;
  std::vector<Witness> witnesses;
  double elapsed_ms = 0;
  int exit_code = 0;
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);

// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace usc::cli
