#pragma once

// Command-line front end.  Exit status: 0 success, 1 domain error
// (malformed input contents, violated precondition), 2 usage error (bad
// arguments, unreadable file).

#include <iosfwd>
#include <string>
#include <vector>

namespace c2kit {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c2kit
