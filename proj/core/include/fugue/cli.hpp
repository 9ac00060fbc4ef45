#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fugue::cli {

/// Runs one command line (without the program name). Exit status:
///   0  success / the checked law holds
///   1  the checked law fails; the counterexample is printed on out
///   2  malformed input, usage error, unknown command
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fugue::cli
