#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistlat {

// Entry point of the command-line tool. args[0] is the program name.
// Returns 0 on success, 1 when `paper` finds a mismatch, 2 on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistlat
