#pragma once

// The hecke-lab command line, as a library function so that tests can drive
// it without spawning processes.
//
// Exit codes: 0 success, 1 a mathematical negative (a search that found
// nothing or a failed check, when --expect was given; or an internal
// contradiction), 2 a usage or input error.

#include <ostream>
#include <string>
#include <vector>

namespace hecke_lab {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke_lab
