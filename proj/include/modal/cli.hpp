#pragma once

// Command-line front end.  Kept as a library function so tests can drive it
// in-process with captured streams.
//
// Exit codes: 0 = everything checked holds (or the requested witness was
// found), 1 = a check was refuted, a published size was missed, or no
// witness exists within the bound, 2 = usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace modal {

// `args` excludes the program name; `in` backs the "-" frame source.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace modal
