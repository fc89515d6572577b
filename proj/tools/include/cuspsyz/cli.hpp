#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cuspsyz {

// Runs the command line (without the program name); returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuspsyz
