#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lrtag {

// `lrtag <subcommand> ...`; args excludes the program name. Returns 0 on
// success, 1 on usage errors, 2 on data errors and failed runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace lrtag
