#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace radio {

// Runs the command-line interface on already-split arguments (no program
// name).  Returns the process exit code: 0 on success, 1 on domain errors
// (reported as one-line JSON on the error stream), 2 on usage errors.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace radio
