#pragma once

// Command-line front end. Exit status: 0 clean, 2 mathematical finding
// (a square f1*f2, an identity failure, ...), 1 usage or runtime error.

#include <iosfwd>
#include <string>
#include <vector>

namespace brick::cli {

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brick::cli
